#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/quantum_ring.hpp"

namespace qschubert {

/// A size x size block of cells with top-left cell (row, col), 1-based
/// matrix coordinates.
struct SquarePlacement {
    int size;
    int row;
    int col;

    friend bool operator==(const SquarePlacement&, const SquarePlacement&) = default;
    friend auto operator<=>(const SquarePlacement&, const SquarePlacement&) = default;
};

/// Largest d such that a d x d square lies inside the diagram of lambda and
/// misses the diagram of dual(mu). This is the smallest power of q in
/// sigma_lambda * sigma_mu.
int dmin(const BoxedPartition& lambda, const BoxedPartition& mu);

/// Every placement of a dmin-sized square, row-major. Empty when dmin = 0.
std::vector<SquarePlacement> maximal_squares(const BoxedPartition& lambda, const BoxedPartition& mu);

struct BelkaleReduction {
    int a;  // steps down lambda's path to the square's SE corner
    int b;  // steps up dual(mu)'s path to the square's NW corner
    BoxedPartition lambda_prime;
    BoxedPartition mu_prime;
};

/// Widens lambda by a columns and mu by b columns and strips n-rims from
/// both. With no square (only allowed when dmin = 0) returns a = b = 0 and
/// the inputs unchanged. Throws InvalidInput for a square that is not a
/// maximal placement, and ConsistencyError if a corner misses its path or a
/// reduction is not +sigma.
BelkaleReduction belkale_reduce(const BoxedPartition& lambda, const BoxedPartition& mu,
                                const std::optional<SquarePlacement>& square);

/// The q^dmin layer of sigma_lambda * sigma_mu, computed as the classical
/// product sigma_lambda' . sigma_mu'. Every maximal square must give the
/// same answer, and it must match the quantum product's layer.
SchurCombination minimal_term(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu);

/// Powers of q present in sigma_lambda * sigma_mu. Throws ConsistencyError
/// if they do not form an interval.
std::set<int> degree_support(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu);

/// Geometric largest degree. Both boundary paths are lifted to periodic
/// staircases in the plane (period (k, -(n-k))), so that the rectangle
/// becomes a torus. The dual(mu) staircase is translated by (t, t) starting
/// from t = dmin, where nothing of lambda lies beyond it, and the result is
/// the first t at which it shares a lattice point with the next copy of
/// lambda's staircase, lambda's staircase shifted by (0, n-k).
int torus_slide_degree(const BoxedPartition& lambda, const BoxedPartition& mu);

/// torus_slide_degree, checked against max(degree_support).
int dmax_slide(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu);

}  // namespace qschubert
