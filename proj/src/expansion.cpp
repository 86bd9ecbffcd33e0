#include "egypt/expansion.hpp"

#include <map>
#include <vector>

namespace egypt {

MixedForm divmod_split(const Rational& v) {
    if (v.is_zero())
        throw std::domain_error("divmod_split: value must be positive");
    Int q = v.floor();
    Rational frac = v - Rational(q);
    return MixedForm{std::move(q), std::move(frac)};
}

GreedyTrace greedy_expand(const Rational& v) {
    if (v.is_zero() || classify_q(v) != QClass::Q_less)
        throw std::domain_error(
            "greedy_expand: value must be a positive proper fraction");

    GreedyTrace trace;
    std::vector<Int> dens;
    Int a = v.num();
    Int b = v.den();
    std::size_t i = 0;
    // Invariant: 0 < a < b, and a strictly decreases each iteration.
    while (a != 0) {
        Int u;
        mpz_cdiv_q(u.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        trace.steps.push_back(GreedyStep{i, a, b, u});
        dens.push_back(u);
        Int a_next = a * u - b;
        Int b_next = b * u;
        a = std::move(a_next);
        b = std::move(b_next);
        ++i;
    }
    trace.result = EgyptianRepr(std::move(dens));
    return trace;
}

namespace {

// Inserts a term, splitting it via 1/t = 1/(t+1) + 1/(t(t+1)) as long as it
// collides with something already present. Replacement terms strictly
// exceed t, so the recursion runs out of collisions.
void insert_splitting(EgyptianRepr& out, const Int& term) {
    if (!out.contains(term)) {
        out.insert(term);
        return;
    }
    insert_splitting(out, term + 1);
    insert_splitting(out, term * (term + 1));
}

// Running lcm(2..d) with its factorization, extended one integer at a time.
struct RunningLcm {
    Int value{1};
    std::map<unsigned long, int> exps;

    // Folds d into the lcm; returns the factor the lcm grew by.
    Int include(unsigned long d) {
        Int mult(1);
        unsigned long m = d;
        for (unsigned long p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            int f = 0;
            while (m % p == 0) {
                m /= p;
                ++f;
            }
            for (int& e = exps[p]; e < f; ++e) mult *= p;
        }
        if (m > 1) {
            int& e = exps[m];
            if (e < 1) {
                e = 1;
                mult *= m;
            }
        }
        value *= mult;
        return mult;
    }
};

// Prime-power ladder of a practical number B = prod p_i^{e_i} (ascending
// primes), with sigma_pref[i] = sigma(prod of the first i prime powers).
struct PracticalBasis {
    std::vector<unsigned long> primes;
    std::vector<int> exps;
    std::vector<Int> sigma_pref;  // sigma_pref[0] = 1

    explicit PracticalBasis(const std::map<unsigned long, int>& factorization) {
        sigma_pref.push_back(Int(1));
        for (const auto& [p, e] : factorization) {
            primes.push_back(p);
            exps.push_back(e);
            Int sigma_pp(0);
            Int pw(1);
            for (int j = 0; j <= e; ++j) {
                sigma_pp += pw;
                pw *= p;
            }
            sigma_pref.push_back(sigma_pref.back() * sigma_pp);
        }
    }
};

// Writes r as a sum of distinct divisors of the first `level` prime powers,
// scaled by `scale`. Works because lcm(2..D) is a practical number: every
// prime in the ladder is at most sigma of the product below it, so the
// capped digit expansion always consumes r exactly. Emitted divisors are
// pairwise distinct (branches differ in the exponent of some prime, and a
// directly emitted residue is too small to carry that prime).
void emit_divisor_sum(const PracticalBasis& basis, Int r, std::size_t level,
                      const Int& scale, std::vector<Int>& divisors) {
    if (r == 0) return;
    if (level == 0) {
        // sigma_pref[0] = 1, so r can only be 1 here.
        divisors.push_back(scale);
        return;
    }
    unsigned long p = basis.primes[level - 1];
    if (r < p) {
        // Any integer below p divides the product of the smaller prime
        // powers (each of its prime-power parts is <= r < p <= D).
        divisors.push_back(scale * r);
        return;
    }
    const Int& cap = basis.sigma_pref[level - 1];
    Int pj(1);
    std::vector<Int> powers{pj};
    for (int j = 1; j <= basis.exps[level - 1]; ++j)
        powers.push_back(powers.back() * p);
    for (int j = basis.exps[level - 1]; j >= 0; --j) {
        Int c = r / powers[j];
        if (c > cap) c = cap;
        if (c > 0) {
            r -= c * powers[j];
            emit_divisor_sum(basis, c, level - 1, scale * powers[j], divisors);
        }
    }
    if (r != 0)
        throw std::logic_error("emit_divisor_sum: digit expansion stalled");
}

// Adds `units` worth of unit fractions to `out`: consumes consecutive
// unused denominators from `cursor` upward, then settles the remainder
// (< 1/d) through the divisor-sum decomposition over the accumulated lcm.
// The term count is forced to grow like e^units (harmonic lower bound), so
// large whole parts are inherently expensive.
void expand_units(EgyptianRepr& out, const Int& units, unsigned long cursor) {
    if (units == 0) return;
    RunningLcm lcm;
    Int rem_num = units;  // remainder is rem_num / lcm.value, unreduced
    unsigned long d = cursor;
    while (true) {
        rem_num *= lcm.include(d);
        if (rem_num * d < lcm.value) break;  // 1/d exceeds the remainder
        if (!out.contains(Int(d))) {
            rem_num -= lcm.value / d;
            out.insert(Int(d));
            if (rem_num == 0) return;
        }
        ++d;
    }
    // rem_num / lcm < 1/d: every tail denominator lcm/div exceeds d, hence
    // exceeds everything consumed consecutively.
    PracticalBasis basis(lcm.exps);
    std::vector<Int> divisors;
    emit_divisor_sum(basis, rem_num, basis.primes.size(), Int(1), divisors);
    for (const Int& div : divisors) insert_splitting(out, lcm.value / div);
}

}  // namespace

EgyptianRepr expand_one_from(const Int& floor) {
    if (floor < 2)
        throw std::domain_error("expand_one_from: floor must be >= 2");
    if (!floor.fits_ulong_p())
        throw std::domain_error("expand_one_from: floor is impractically large");
    EgyptianRepr out;
    expand_units(out, Int(1), floor.get_ui());
    return out;
}

EgyptianRepr expand_full(const Rational& v) {
    if (v.is_zero())
        throw std::domain_error("expand_full: value must be positive");

    MixedForm mixed = divmod_split(v);
    EgyptianRepr out;
    if (!mixed.frac.is_zero()) out = greedy_expand(mixed.frac).result;
    expand_units(out, mixed.whole, 2);
    return out;
}

std::vector<EgyptianRepr> enumerate_one_representations(int count) {
    if (count < 1)
        throw std::domain_error(
            "enumerate_one_representations: count must be >= 1");
    std::vector<EgyptianRepr> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int m = 2; m < 2 + count; ++m) out.push_back(expand_one_from(Int(m)));
    return out;
}

}  // namespace egypt
