#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qschubert/coefficient.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/quantum_ring.hpp"

namespace qschubert {

/// Schur functions of the boxed partitions evaluated at the C(n,k) points
/// x_S = (omega * zeta^s)_{s in S}, S a k-subset of {0..n-1}, zeta = e^{2 pi i/n}
/// and omega = e^{pi i (k-1)/n}. The points solve x^n = (-1)^(k-1), which is
/// where the fusion ring of U(k) at level n-k lives; the matrix is square and
/// invertible, and it diagonalizes multiplication at q = 1.
class CharacterTable {
public:
    /// Largest supported n.
    static constexpr int kMaxN = 12;
    /// Tables with a smaller reciprocal condition estimate are rejected.
    static constexpr double kMinReciprocalCondition = 1e-10;

    explicit CharacterTable(BoxShape shape);

    const BoxShape& shape() const { return shape_; }
    /// Rows, in lexicographic order of the subsets.
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }
    /// Columns, in boxed_partitions order.
    const std::vector<BoxedPartition>& partitions() const { return partitions_; }
    const Eigen::MatrixXcd& values() const { return values_; }
    double reciprocal_condition() const { return rcond_; }

    /// s_lambda at every point, in row order.
    Eigen::VectorXcd evaluate(const Partition& lambda) const;

    Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const { return lu_.solve(rhs); }

private:
    BoxShape shape_;
    std::vector<std::vector<int>> subsets_;
    std::vector<BoxedPartition> partitions_;
    std::vector<std::vector<std::complex<double>>> points_;
    Eigen::MatrixXcd values_;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
    double rcond_ = 0;
};

/// Builds the table; ResourceLimit for n > 12, ConsistencyError if singular.
CharacterTable character_table(const BoxShape& shape);

struct FusionProduct {
    std::map<Partition, Coefficient, std::greater<>> coefficients;
    double residual = 0;        // max-norm of M c - rhs
    double rounding_error = 0;  // max distance of c from the nearest integers
};

/// Structure constants of V_lambda (x) V_mu recovered by solving
/// M c = s_lambda s_mu pointwise. Each is the sum over d of the quantum
/// coefficients c(d) of sigma_nu; at most one d contributes per nu.
/// NumericalFailure if residual or rounding exceeds 1e-6.
FusionProduct fusion_product(const CharacterTable& table, const BoxedPartition& lambda, const BoxedPartition& mu);

constexpr double kFusionTolerance = 1e-6;

struct FusionReport {
    BoxShape shape;
    std::size_t pairs = 0;
    double max_residual = 0;
    double max_rounding_error = 0;
    std::vector<std::string> mismatches;
};

/// Compares fusion_product against the degree-collapsed quantum product for
/// one pair. Returns a description of the mismatch, or an empty string.
std::string compare_with_quantum(const QuantumRing& ring, const FusionProduct& fusion, const BoxedPartition& lambda,
                                 const BoxedPartition& mu);

/// Every ordered pair of the shape. Throws ConsistencyError listing the
/// mismatches if there are any.
FusionReport verify_quantum_vs_fusion(const QuantumRing& ring, const CharacterTable& table, unsigned jobs = 1);

}  // namespace qschubert
