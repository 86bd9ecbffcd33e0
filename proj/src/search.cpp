#include "egypt/search.hpp"

#include <omp.h>

#include <algorithm>

namespace egypt {

namespace {

bool parity_ok(const Int& d, ParityFilter f) {
    switch (f) {
        case ParityFilter::any: return true;
        case ParityFilter::all_odd: return mpz_odd_p(d.get_mpz_t());
        case ParityFilter::all_even: return mpz_even_p(d.get_mpz_t());
    }
    return false;
}

/// Smallest d with 1/d <= rem, i.e. ceil(den/num).
Int first_candidate(const Rational& rem) {
    Int d;
    mpz_cdiv_q(d.get_mpz_t(), rem.den().get_mpz_t(), rem.num().get_mpz_t());
    if (d < 2) d = 2;
    return d;
}

/// Prune test: with t terms left, even t copies of 1/d cannot reach rem
/// when t/d < rem. Monotone in d, so the caller may stop scanning.
bool unreachable(const Rational& rem, int terms_left, const Int& d) {
    return Int(terms_left) * rem.den() < rem.num() * d;
}

void dfs(const Rational& rem, const Int& min_d, int terms_left,
         const SearchConstraints& c, std::vector<Int>& prefix,
         std::vector<EgyptianRepr>& out) {
    if (rem.is_zero()) {
        if (!prefix.empty()) out.emplace_back(prefix);
        return;
    }
    if (terms_left == 0) return;
    Int d = std::max(min_d, first_candidate(rem));
    for (; d <= c.max_denominator && !unreachable(rem, terms_left, d); d += 1) {
        if (!parity_ok(d, c.parity)) continue;
        prefix.push_back(d);
        dfs(rem - Rational::unit(d), d + 1, terms_left - 1, c, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Int> root_candidates(const Rational& target,
                                 const SearchConstraints& c) {
    std::vector<Int> roots;
    for (Int d = first_candidate(target);
         d <= c.max_denominator && !unreachable(target, c.max_terms, d);
         d += 1) {
        if (parity_ok(d, c.parity)) roots.push_back(d);
    }
    return roots;
}

}  // namespace

void SearchConstraints::validate() const {
    if (max_terms < 1)
        throw std::domain_error("SearchConstraints: max_terms must be >= 1");
    if (max_denominator < 2)
        throw std::domain_error(
            "SearchConstraints: max_denominator must be >= 2");
}

std::vector<EgyptianRepr> enumerate_reprs_serial(const Rational& target,
                                                 const SearchConstraints& c) {
    if (target.is_zero())
        throw std::domain_error("enumerate_reprs: target must be positive");
    c.validate();
    std::vector<EgyptianRepr> out;
    std::vector<Int> prefix;
    dfs(target, Int(2), c.max_terms, c, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EgyptianRepr> enumerate_reprs(const Rational& target,
                                          const SearchConstraints& c) {
    if (target.is_zero())
        throw std::domain_error("enumerate_reprs: target must be positive");
    c.validate();

    const std::vector<Int> roots = root_candidates(target, c);
    std::vector<std::vector<EgyptianRepr>> partial(roots.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Int& d = roots[i];
        std::vector<Int> prefix{d};
        dfs(target - Rational::unit(d), d + 1, c.max_terms - 1, c, prefix,
            partial[i]);
    }

    std::vector<EgyptianRepr> out;
    // A singleton {d} is a solution when target = 1/d exactly; the root
    // loop above always recurses, so dfs handles it via the zero remainder.
    for (auto& chunk : partial)
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool two_term_odd_split_exists(const Int& n) {
    if (n < 3 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error(
            "two_term_odd_split_exists: n must be odd and >= 3");
    // 1/b = 1/n - 1/a forces a > n; a <= n(n+1) + n covers every a for
    // which b = na/(a-n) is an integer >= 2.
    const Int bound = n * (n + 1) + n;
    for (Int a = n + 2; a <= bound; a += 2) {
        Int gap = a - n;
        Int num = n * a;
        if (num % gap != 0) continue;
        Int b = num / gap;
        if (b > 1 && b != a && mpz_odd_p(b.get_mpz_t())) return true;
    }
    return false;
}

bool verify_instance(const OperatorInstance& inst) {
    auto side_sum = [](const std::vector<Int>& terms) {
        Rational total;
        for (const Int& t : terms) total += Rational(Int(1), t);
        return total;
    };
    if (inst.consumed().empty() || inst.produced().empty()) return false;
    for (const Int& t : inst.consumed())
        if (t < 2) return false;
    for (const Int& t : inst.produced())
        if (t < 2) return false;
    return side_sum(inst.consumed()) == side_sum(inst.produced());
}

std::vector<EgyptianRepr> search_all_odd(const Rational& target,
                                         SearchConstraints c) {
    c.parity = ParityFilter::all_odd;
    return enumerate_reprs(target, c);
}

}  // namespace egypt
