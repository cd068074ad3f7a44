#pragma once

#include <map>
#include <vector>

#include "qschubert/coefficient.hpp"
#include "qschubert/partition.hpp"

namespace qschubert {

/// Independent check of Littlewood-Richardson coefficients. Multiplies the
/// Schur polynomials s_lambda(x_1..x_m) as explicit monomial sums (each built
/// from semistandard tableaux), then repeatedly strips the lexicographically
/// leading monomial x^nu with coefficient c by subtracting c * s_nu.
///
/// Returns the Schur expansion restricted to partitions with at most m rows.
/// Throws ResourceLimit when the degree-|nu| monomial space exceeds 10^7.
std::map<Partition, Coefficient> schur_expand_monomials(const std::vector<Partition>& lambdas, int m);

}  // namespace qschubert
