#pragma once

/**
 * @file operators.hpp
 * @brief The operator algebra on Egyptian representations: splitters, the
 *        two-term rewriter, pair merging, parity analysis, and application
 *        of operator instances to whole representations.
 */

#include "egypt/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egypt {

/// Classification of an identity by how it changes cardinality.
enum class OperatorKind { Splitter, Rewriter, Merger };

std::string to_string(OperatorKind k);

/// Named parameter of an operator instance, e.g. {"q", 2}.
struct OperatorParam {
    std::string name;
    Int value;

    bool operator==(const OperatorParam&) const = default;
};

/// A concrete applied identity. Construction verifies that the consumed and
/// produced sides have identical exact sums; a mismatched instance cannot
/// exist through the checked path.
class OperatorInstance {
public:
    OperatorInstance(std::string rule, std::vector<OperatorParam> params,
                     std::vector<Int> consumed, std::vector<Int> produced);

    /// Builds an instance without the sum check. Test-only escape hatch so
    /// the oracle can be exercised against deliberately broken instances.
    static OperatorInstance unchecked(std::string rule,
                                      std::vector<OperatorParam> params,
                                      std::vector<Int> consumed,
                                      std::vector<Int> produced);

    const std::string& rule() const { return rule_; }
    const std::vector<OperatorParam>& params() const { return params_; }
    const std::vector<Int>& consumed() const { return consumed_; }
    const std::vector<Int>& produced() const { return produced_; }

    /// Canonical text form: "rule(p=1,...): [consumed] -> [produced]".
    std::string str() const;

private:
    OperatorInstance() = default;

    std::string rule_;
    std::vector<OperatorParam> params_;
    std::vector<Int> consumed_;  // ascending
    std::vector<Int> produced_;  // ascending
};

/// Parameters of the two-term rewriter identity, with the derived r and s.
struct RewriteParams {
    Int q;  // >= 2
    Int d;  // >= 1
    Int r;  // q + d
    Int s;  // q*r - d

    static RewriteParams from(const Int& q, const Int& d);

    bool operator==(const RewriteParams&) const = default;
};

enum class RewriteDirection { forward, backward };

/// (n) -> (n+1, n(n+1)).
OperatorInstance split_basic(const Int& n);

/// General product rule: the product of the x_i splits into one term per
/// factor, each x_i scaled by z = sum over j of the product with x_j removed.
OperatorInstance split_product(const std::vector<Int>& xs);

/// Even-preserving split: (2n) -> (2(n+1), 2n(n+1)) for n >= 2.
OperatorInstance split_even(const Int& two_n);

/// Odd three-way split of an odd n >= 3 into three odd distinct terms.
OperatorInstance split_odd3(const Int& n);

/// Two-term rewriter: with r = q+d, s = qr-d, consumes {qr, qs} and
/// produces {s, rs}.
OperatorInstance rewrite_pair(const Int& q, const Int& d);

/// The same identity read right-to-left (consumed and produced swapped).
OperatorInstance reversed(const OperatorInstance& inst);

/// Inverse lookup: does {x, y} match either side of a rewriter identity?
/// Smallest-q match wins; forward is checked before backward.
std::optional<std::pair<RewriteParams, RewriteDirection>> rewrite_match(
    const Int& x, const Int& y);

/// 1/x + 1/y = 1/n when n = xy/(x+y) is an integer >= 2, else empty.
std::optional<Int> merge_pair(const Int& x, const Int& y);

enum class CollisionPolicy { strict, resplit };

/// Replaces inst's consumed terms in X with its produced terms. Under
/// `strict`, any collision with a retained term is an error; under
/// `resplit`, colliding terms are split basically until the collision
/// clears (terminates: replacements strictly exceed the colliding term).
EgyptianRepr apply_to_repr(const EgyptianRepr& x, const OperatorInstance& inst,
                           CollisionPolicy policy = CollisionPolicy::strict);

/// Splitter / Rewriter / Merger by cardinality, for equal-sum pairs.
OperatorKind classify_operator(const EgyptianRepr& x, const EgyptianRepr& x2);

/// True iff every consumed and produced term shares one parity.
bool is_parity_preserving(const OperatorInstance& inst);

/// Theorem-level criterion: the rewriter at (q, d) is all-odd
/// parity-preserving iff q is odd and d is even.
bool odd_preserving_check(const Int& q, const Int& d);

/// Checks the full ordering chain q < r < s < qr < qs < rs.
bool inequality_chain_check(const Int& q, const Int& d);

}  // namespace egypt
