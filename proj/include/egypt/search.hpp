#pragma once

/**
 * @file search.hpp
 * @brief Brute-force enumeration of Egyptian representations under explicit
 *        bounds. This module is the independent ground truth against which
 *        the constructive operators are checked, so it shares no code with
 *        them.
 *
 * Two enumeration kernels are provided: a plain serial depth-first search
 * kept as the reference, and an OpenMP variant that fans the root branches
 * out across threads and restores lexicographic order by a final sort. Both
 * return identical results; tests compare them directly.
 */

#include "egypt/operators.hpp"
#include "egypt/rational.hpp"

#include <vector>

namespace egypt {

enum class ParityFilter { any, all_odd, all_even };

/// Bounds steering the exhaustive search. Distinctness is always enforced;
/// the flag exists for documentation only.
struct SearchConstraints {
    int max_terms = 1;
    Int max_denominator = Int(2);
    ParityFilter parity = ParityFilter::any;
    bool require_distinct = true;

    void validate() const;
};

/// All representations X with sum(X) = target under the constraints,
/// lexicographically sorted. OpenMP-parallel over root branches.
std::vector<EgyptianRepr> enumerate_reprs(const Rational& target,
                                          const SearchConstraints& c);

/// Serial reference enumeration; same contract and output as
/// enumerate_reprs.
std::vector<EgyptianRepr> enumerate_reprs_serial(const Rational& target,
                                                 const SearchConstraints& c);

/// Exhaustive check for an odd two-term split (n) = (a, b) with odd a, b.
/// Scans every odd a in (n, n(n+1) + n] and tests b = na/(a-n) for odd
/// integrality. Returns true iff a witness exists.
bool two_term_odd_split_exists(const Int& n);

/// Re-derives both sides of an instance by exact summation, independent of
/// the construction-time check. Handles deliberately broken instances.
bool verify_instance(const OperatorInstance& inst);

/// enumerate_reprs with the all-odd filter forced on.
std::vector<EgyptianRepr> search_all_odd(const Rational& target,
                                         SearchConstraints c);

}  // namespace egypt
