#include "qschubert/fusion.hpp"

#include <cmath>
#include <numbers>

#include "qschubert/error.hpp"
#include "qschubert/parallel.hpp"

namespace qschubert {

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(current.size())); ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// x_s^e with x_s = exp(pi i (2s + k - 1) / n); the exponent is reduced mod 2n
// before the trigonometric call so large powers stay accurate.
std::complex<double> point_power(int s, int e, int k, int n) {
    long long numerator = (static_cast<long long>(e) * (2 * s + k - 1)) % (2LL * n);
    return std::polar(1.0, std::numbers::pi * static_cast<double>(numerator) / n);
}

}  // namespace

CharacterTable::CharacterTable(BoxShape shape) : shape_(shape) {
    const int k = shape.k();
    const int n = shape.n();
    if (n > kMaxN) {
        throw ResourceLimit("character table limited to n <= " + std::to_string(kMaxN) + ", got n=" + std::to_string(n));
    }
    subsets_ = k_subsets(n, k);
    partitions_ = boxed_partitions(shape);
    if (subsets_.size() != partitions_.size()) throw ConsistencyError("character table is not square");

    const auto size = static_cast<Eigen::Index>(subsets_.size());
    values_.resize(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
        values_.col(col) = evaluate(partitions_[static_cast<std::size_t>(col)].partition());
    }
    lu_.compute(values_);
    rcond_ = lu_.rcond();
    if (!(rcond_ > kMinReciprocalCondition)) {
        throw ConsistencyError("character table for Gr(" + shape.to_string() + ") is numerically singular");
    }
}

Eigen::VectorXcd CharacterTable::evaluate(const Partition& lambda) const {
    const int k = shape_.k();
    const int n = shape_.n();
    if (lambda.length() > k) throw InvalidInput("partition has more than k rows");
    const auto parts = lambda.padded(k);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(subsets_.size()));
    Eigen::MatrixXcd alternant(k, k);
    for (std::size_t row = 0; row < subsets_.size(); ++row) {
        const auto& subset = subsets_[row];
        // Bialternant: det(x_i^(lambda_j + k - j)) / prod_{i<j} (x_i - x_j).
        std::complex<double> vandermonde = 1;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                alternant(i, j) = point_power(subset[i], parts[j] + k - 1 - j, k, n);
            }
            for (int j = i + 1; j < k; ++j) {
                vandermonde *= point_power(subset[i], 1, k, n) - point_power(subset[j], 1, k, n);
            }
        }
        out(static_cast<Eigen::Index>(row)) = alternant.determinant() / vandermonde;
    }
    return out;
}

CharacterTable character_table(const BoxShape& shape) { return CharacterTable(shape); }

FusionProduct fusion_product(const CharacterTable& table, const BoxedPartition& lambda, const BoxedPartition& mu) {
    if (lambda.shape() != table.shape() || mu.shape() != table.shape()) {
        throw InvalidInput("partitions do not belong to the table's shape");
    }
    Eigen::VectorXcd rhs = table.evaluate(lambda.partition()).cwiseProduct(table.evaluate(mu.partition()));
    Eigen::VectorXcd solution = table.solve(rhs);

    FusionProduct out;
    out.residual = (table.values() * solution - rhs).cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < solution.size(); ++i) {
        const double rounded = std::round(solution(i).real());
        out.rounding_error = std::max(out.rounding_error, std::abs(solution(i) - std::complex<double>(rounded, 0)));
        if (rounded < 0) {
            throw ConsistencyError("fusion coefficient of (" + table.partitions()[i].partition().to_string() +
                                   ") is negative");
        }
        if (rounded != 0) {
            out.coefficients.emplace(table.partitions()[i].partition(), Coefficient(static_cast<long long>(rounded)));
        }
    }
    if (!(out.residual < kFusionTolerance) || !(out.rounding_error < kFusionTolerance)) {
        throw NumericalFailure("fusion solve for (" + lambda.partition().to_string() + ") * (" +
                               mu.partition().to_string() + ") exceeded tolerance: residual " +
                               std::to_string(out.residual) + ", rounding " + std::to_string(out.rounding_error));
    }
    return out;
}

std::string compare_with_quantum(const QuantumRing& ring, const FusionProduct& fusion, const BoxedPartition& lambda,
                                 const BoxedPartition& mu) {
    std::map<Partition, Coefficient, std::greater<>> collapsed;
    for (const auto& [key, c] : ring.product(lambda, mu).terms()) collapsed[key.nu] += c;
    if (collapsed == fusion.coefficients) return {};
    std::string detail = "(" + lambda.partition().to_string() + ") * (" + mu.partition().to_string() + "): quantum " +
                         ring.product(lambda, mu).to_string() + ", fusion";
    for (const auto& [nu, c] : fusion.coefficients) detail += " " + c.str() + "*s[" + nu.to_string() + "]";
    return detail;
}

FusionReport verify_quantum_vs_fusion(const QuantumRing& ring, const CharacterTable& table, unsigned jobs) {
    if (ring.shape() != table.shape()) throw InvalidInput("ring and table shapes differ");
    const auto& parts = table.partitions();
    const std::size_t count = parts.size();
    std::vector<FusionProduct> results(count * count);
    std::vector<std::string> mismatch(count * count);
    parallel_for(count * count, jobs, [&](std::size_t index) {
        const auto& lambda = parts[index / count];
        const auto& mu = parts[index % count];
        results[index] = fusion_product(table, lambda, mu);
        mismatch[index] = compare_with_quantum(ring, results[index], lambda, mu);
    });

    FusionReport report{table.shape(), count * count, 0, 0, {}};
    for (std::size_t i = 0; i < results.size(); ++i) {
        report.max_residual = std::max(report.max_residual, results[i].residual);
        report.max_rounding_error = std::max(report.max_rounding_error, results[i].rounding_error);
        if (!mismatch[i].empty()) report.mismatches.push_back(mismatch[i]);
    }
    if (!report.mismatches.empty()) {
        throw ConsistencyError("fusion oracle disagrees with the quantum product in Gr(" + table.shape().to_string() +
                               "): " + report.mismatches.front() + " (" + std::to_string(report.mismatches.size()) +
                               " mismatches)");
    }
    return report;
}

}  // namespace qschubert
