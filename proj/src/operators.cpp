#include "egypt/operators.hpp"

#include <algorithm>

namespace egypt {

namespace {

Rational unit_sum(const std::vector<Int>& terms) {
    Rational total;
    for (const Int& t : terms) total += Rational::unit(t);
    return total;
}

void sort_and_check_distinct(std::vector<Int>& terms, const char* side) {
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] < 2)
            throw std::domain_error(std::string("OperatorInstance: ") + side +
                                    " term must be >= 2");
        if (i > 0 && terms[i] == terms[i - 1])
            throw std::domain_error(std::string("OperatorInstance: duplicate ") +
                                    side + " term " + terms[i].get_str());
    }
}

}  // namespace

std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::Splitter: return "splitter";
        case OperatorKind::Rewriter: return "rewriter";
        case OperatorKind::Merger: return "merger";
    }
    return "?";
}

OperatorInstance::OperatorInstance(std::string rule,
                                   std::vector<OperatorParam> params,
                                   std::vector<Int> consumed,
                                   std::vector<Int> produced)
    : rule_(std::move(rule)),
      params_(std::move(params)),
      consumed_(std::move(consumed)),
      produced_(std::move(produced)) {
    if (consumed_.empty() || produced_.empty())
        throw std::domain_error("OperatorInstance: both sides must be nonempty");
    sort_and_check_distinct(consumed_, "consumed");
    sort_and_check_distinct(produced_, "produced");
    if (unit_sum(consumed_) != unit_sum(produced_))
        throw std::domain_error("OperatorInstance: sides do not sum equally");
}

OperatorInstance OperatorInstance::unchecked(std::string rule,
                                             std::vector<OperatorParam> params,
                                             std::vector<Int> consumed,
                                             std::vector<Int> produced) {
    OperatorInstance inst;
    inst.rule_ = std::move(rule);
    inst.params_ = std::move(params);
    inst.consumed_ = std::move(consumed);
    inst.produced_ = std::move(produced);
    std::sort(inst.consumed_.begin(), inst.consumed_.end());
    std::sort(inst.produced_.begin(), inst.produced_.end());
    return inst;
}

std::string OperatorInstance::str() const {
    auto list = [](const std::vector<Int>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += v[i].get_str();
        }
        return out + "]";
    };
    std::string out = rule_;
    if (!params_.empty()) {
        out += "(";
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (i) out += ",";
            out += params_[i].name + "=" + params_[i].value.get_str();
        }
        out += ")";
    }
    out += ": " + list(consumed_) + " -> " + list(produced_);
    return out;
}

RewriteParams RewriteParams::from(const Int& q, const Int& d) {
    if (q < 2) throw std::domain_error("rewrite: q must be >= 2");
    if (d < 1) throw std::domain_error("rewrite: d must be >= 1");
    Int r = q + d;
    Int s = q * r - d;
    return RewriteParams{q, d, std::move(r), std::move(s)};
}

OperatorInstance split_basic(const Int& n) {
    if (n < 2) throw std::domain_error("split_basic: n must be >= 2");
    return OperatorInstance("basic_split", {{"n", n}}, {n},
                            {n + 1, n * (n + 1)});
}

OperatorInstance split_product(const std::vector<Int>& xs) {
    if (xs.size() < 2)
        throw std::domain_error("split_product: need at least two factors");
    Int product(1);
    Int factor_sum(0);
    for (const Int& x : xs) {
        if (x < 1)
            throw std::domain_error("split_product: factors must be >= 1");
        product *= x;
        factor_sum += x;
    }
    if (product < 2)
        throw std::domain_error("split_product: product must be >= 2");
    // 1/P = sum_i x_i / (P * sum_j x_j), so each produced term is
    // P * (sum of factors) / x_i.
    Int scaled = product * factor_sum;
    std::vector<Int> produced;
    produced.reserve(xs.size());
    for (const Int& x : xs) produced.push_back(scaled / x);
    return OperatorInstance("product_split", {{"n", product}}, {product},
                            std::move(produced));
}

OperatorInstance split_even(const Int& two_n) {
    if (two_n < 4 || mpz_odd_p(two_n.get_mpz_t()))
        throw std::domain_error("split_even: input must be even and >= 4");
    Int n = two_n / 2;
    return OperatorInstance("even_split", {{"n", n}}, {two_n},
                            {2 * (n + 1), 2 * n * (n + 1)});
}

OperatorInstance split_odd3(const Int& n) {
    if (n < 3 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("split_odd3: input must be odd and >= 3");
    Int k = (n - 1) / 2;
    const Int a(3);
    Int b = 3 * k + 2;
    std::vector<Int> produced;
    if (mpz_odd_p(k.get_mpz_t())) {
        produced = {b, a * n, a * b * n};
    } else {
        produced = {b + 1, a * n, (b + 1) * n};
    }
    return OperatorInstance("odd3_split", {{"n", n}, {"k", k}}, {n},
                            std::move(produced));
}

OperatorInstance rewrite_pair(const Int& q, const Int& d) {
    RewriteParams p = RewriteParams::from(q, d);
    return OperatorInstance("rewrite", {{"q", q}, {"d", d}},
                            {p.q * p.r, p.q * p.s}, {p.s, p.r * p.s});
}

OperatorInstance reversed(const OperatorInstance& inst) {
    return OperatorInstance(inst.rule() + "_reverse", inst.params(),
                            inst.produced(), inst.consumed());
}

std::optional<std::pair<RewriteParams, RewriteDirection>> rewrite_match(
    const Int& x, const Int& y) {
    if (x == y || x < 2 || y < 2)
        throw std::domain_error("rewrite_match: need two distinct terms >= 2");
    const Int& lo = std::min(x, y);
    const Int& hi = std::max(x, y);

    // Forward: {lo, hi} = {qr, qs} with r < s, so q divides both.
    for (Int q(2); q * q <= hi; q += 1) {
        if (lo % q != 0 || hi % q != 0) continue;
        Int r = lo / q;
        Int s = hi / q;
        Int d = r - q;
        if (d < 1) continue;
        if (s == q * r - d)
            return std::make_pair(RewriteParams{q, d, r, s},
                                  RewriteDirection::forward);
    }

    // Backward: {lo, hi} = {s, rs}, so r = hi/lo and d = (r^2 - s)/(r + 1).
    if (hi % lo == 0) {
        Int r = hi / lo;
        const Int& s = lo;
        Int num = r * r - s;
        if (num > 0 && num % (r + 1) == 0) {
            Int d = num / (r + 1);
            Int q = r - d;
            if (d >= 1 && q >= 2 && s == q * r - d)
                return std::make_pair(RewriteParams{q, d, r, s},
                                      RewriteDirection::backward);
        }
    }
    return std::nullopt;
}

std::optional<Int> merge_pair(const Int& x, const Int& y) {
    if (x == y || x < 2 || y < 2)
        throw std::domain_error("merge_pair: need two distinct terms >= 2");
    Int num = x * y;
    Int den = x + y;
    if (num % den != 0) return std::nullopt;
    Int n = num / den;
    if (n < 2) return std::nullopt;
    return n;
}

namespace {

void insert_resolving(EgyptianRepr& repr, const Int& term,
                      CollisionPolicy policy) {
    if (!repr.contains(term)) {
        repr.insert(term);
        return;
    }
    if (policy == CollisionPolicy::strict)
        throw std::domain_error("apply_to_repr: produced term " +
                                term.get_str() + " collides with a retained term");
    // Resplit: replacement terms strictly exceed the colliding one, so the
    // recursion runs out of collisions against the finite retained set.
    OperatorInstance fix = split_basic(term);
    for (const Int& t : fix.produced()) insert_resolving(repr, t, policy);
}

}  // namespace

EgyptianRepr apply_to_repr(const EgyptianRepr& x, const OperatorInstance& inst,
                           CollisionPolicy policy) {
    EgyptianRepr out = x;
    for (const Int& c : inst.consumed()) {
        if (!out.contains(c))
            throw std::domain_error("apply_to_repr: consumed term " +
                                    c.get_str() + " not present");
        out.erase(c);
    }
    for (const Int& p : inst.produced()) insert_resolving(out, p, policy);
    return out;
}

OperatorKind classify_operator(const EgyptianRepr& x, const EgyptianRepr& x2) {
    if (repr_sum(x) != repr_sum(x2))
        throw std::domain_error("classify_operator: sums differ");
    if (x.size() < x2.size()) return OperatorKind::Splitter;
    if (x.size() == x2.size()) return OperatorKind::Rewriter;
    return OperatorKind::Merger;
}

bool is_parity_preserving(const OperatorInstance& inst) {
    std::vector<Int> all = inst.consumed();
    all.insert(all.end(), inst.produced().begin(), inst.produced().end());
    return parity_signature(all).all_same();
}

bool odd_preserving_check(const Int& q, const Int& d) {
    if (q < 2) throw std::domain_error("odd_preserving_check: q must be >= 2");
    if (d < 1) throw std::domain_error("odd_preserving_check: d must be >= 1");
    return mpz_odd_p(q.get_mpz_t()) && mpz_even_p(d.get_mpz_t());
}

bool inequality_chain_check(const Int& q, const Int& d) {
    RewriteParams p = RewriteParams::from(q, d);
    Int qr = p.q * p.r;
    Int qs = p.q * p.s;
    Int rs = p.r * p.s;
    return p.q < p.r && p.r < p.s && p.s < qr && qr < qs && qs < rs;
}

}  // namespace egypt
