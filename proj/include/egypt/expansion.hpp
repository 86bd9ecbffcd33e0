#pragma once

/**
 * @file expansion.hpp
 * @brief Constructive decomposition of positive rationals into Egyptian
 *        representations: greedy expansion, mixed-form normalization,
 *        floor-constrained expansions of 1, and the full chained assembly.
 */

#include "egypt/rational.hpp"

#include <vector>

namespace egypt {

/// Whole/fractional split of a positive rational: value = whole + frac with
/// 0 <= frac < 1.
struct MixedForm {
    Int whole;
    Rational frac;
};

/// One step of the greedy recurrence. The (a, b) pair is recorded unreduced,
/// exactly as produced by a_{i+1} = a_i*u - b_i, b_{i+1} = b_i*u.
struct GreedyStep {
    std::size_t index;
    Int a;  // numerator entering this step
    Int b;  // denominator entering this step
    Int u;  // emitted denominator: ceil(b/a)
};

/// Full trace of a greedy expansion. The numerator sequence across steps is
/// strictly decreasing, which witnesses termination.
struct GreedyTrace {
    std::vector<GreedyStep> steps;
    EgyptianRepr result;
};

/// Division-algorithm split: whole = floor(v), frac = v - whole.
MixedForm divmod_split(const Rational& v);

/// Greedy unit-fraction expansion of a proper fraction. Emitted denominators
/// strictly increase and re-sum exactly to the input.
GreedyTrace greedy_expand(const Rational& v);

/// Expansion of 1 whose smallest denominator is exactly `floor` (>= 2).
/// Consumes consecutive denominators floor, floor+1, ... while they fit,
/// then finishes the remainder greedily.
EgyptianRepr expand_one_from(const Int& floor);

/// Decomposition of an arbitrary positive rational into globally distinct
/// unit fractions: proper part first, then one chained expansion of 1 per
/// whole unit. Note the output size grows like e^v (harmonic lower bound),
/// so whole parts beyond ~12 are impractical.
EgyptianRepr expand_full(const Rational& v);

/// `count` pairwise-distinct representations of 1, with minima 2, 3, ...
std::vector<EgyptianRepr> enumerate_one_representations(int count);

}  // namespace egypt
