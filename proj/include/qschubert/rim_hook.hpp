#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qschubert/partition.hpp"

namespace qschubert {

/// Outcome of stripping n-rim hooks from a partition with at most k rows:
/// either zero, or a boxed partition nu together with the number of rims d
/// and the accumulated sign. When reduced, |input| = |nu| + d*n.
class RimReduction {
public:
    static RimReduction zero() { return RimReduction(); }
    static RimReduction reduced(BoxedPartition nu, int rims, int sign);

    bool is_zero() const { return !nu_.has_value(); }
    explicit operator bool() const { return !is_zero(); }

    /// Only valid when !is_zero().
    const BoxedPartition& partition() const;
    int rims() const { return rims_; }
    int sign() const { return sign_; }

    friend bool operator==(const RimReduction&, const RimReduction&) = default;

private:
    RimReduction() = default;
    std::optional<BoxedPartition> nu_;
    int rims_ = 0;
    int sign_ = 0;
};

/// Abacus reduction. Each beta number is taken mod n; a collision means the
/// class vanishes. The sign is sgn(sorting permutation) * (-1)^(d(k-1)),
/// i.e. (-1)^(k - height) per removed rim.
RimReduction rim_reduce(const Partition& rho, const BoxShape& shape);

/// One removable rim hook of a given size.
struct RimHook {
    Partition remainder;
    int height;  // number of rows the hook occupies
};

/// All border strips of `size` cells whose removal leaves a partition,
/// found directly on the diagram.
std::vector<RimHook> removable_rim_hooks(const Partition& rho, int size);

/// Set of outcomes reachable by removing n-rim hooks one at a time, in every
/// possible order, each rim contributing (-1)^(k - height). A partition that
/// is outside the box with nothing to remove contributes Zero. The abacus
/// result is correct exactly when this set is the single abacus outcome.
struct RimOutcome {
    bool zero;
    Partition nu;
    int rims;
    int sign;

    friend auto operator<=>(const RimOutcome&, const RimOutcome&) = default;
};
std::set<RimOutcome> rim_reduce_all_orders(const Partition& rho, const BoxShape& shape);

}  // namespace qschubert
