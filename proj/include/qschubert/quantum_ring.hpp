#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/coefficient.hpp"
#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/partition.hpp"

namespace qschubert {

/// Index of one basis element q^degree * sigma_nu.
struct QuantumKey {
    int degree;
    Partition nu;

    friend bool operator==(const QuantumKey&, const QuantumKey&) = default;
};

/// Ascending degree, then descending lexicographic nu. This is the display
/// and serialization order.
struct QuantumKeyOrder {
    bool operator()(const QuantumKey& a, const QuantumKey& b) const {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.nu > b.nu;
    }
};

/// Element of QH*(Gr(k,n)): a finite Z-combination of q^d sigma_nu with nu
/// boxed. Zero coefficients are never stored.
class QuantumClass {
public:
    using Terms = std::map<QuantumKey, Coefficient, QuantumKeyOrder>;

    explicit QuantumClass(BoxShape shape) : shape_(shape) {}

    /// q^degree * sigma_nu.
    static QuantumClass basis(const BoxedPartition& nu, int degree = 0);

    const BoxShape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int degree, const Partition& nu, const Coefficient& c);
    Coefficient coefficient(int degree, const Partition& nu) const;

    /// Degrees carrying at least one term.
    std::set<int> degrees() const;

    /// The q^degree part as a Schur combination; throws if it has a
    /// negative coefficient.
    SchurCombination layer(int degree) const;

    bool all_positive() const;

    QuantumClass& operator+=(const QuantumClass& other);
    QuantumClass& operator-=(const QuantumClass& other);
    QuantumClass scaled(const Coefficient& c) const;

    std::string to_string() const;

    friend bool operator==(const QuantumClass&, const QuantumClass&) = default;

private:
    BoxShape shape_;
    Terms terms_;
};

/// sigma_lambda * sigma_mu by rim-hook reduction: expand s_lambda s_mu in
/// Schur functions with at most k rows, reduce every term modulo n-rims, and
/// accumulate sign * coefficient on (d, nu). Throws ConsistencyError if the
/// result is empty or has a negative coefficient.
QuantumClass quantum_product(const BoxedPartition& lambda, const BoxedPartition& mu);

/// The (d, nu) coefficient of sigma_lambda * sigma_mu.
Coefficient quantum_lr(const BoxedPartition& lambda, const BoxedPartition& mu, const BoxedPartition& nu, int degree);

/// Memoizing multiplication engine for one shape. Safe to share across
/// threads; the memo tables are insert-only.
class QuantumRing {
public:
    explicit QuantumRing(BoxShape shape);
    ~QuantumRing();
    QuantumRing(const QuantumRing&) = delete;
    QuantumRing& operator=(const QuantumRing&) = delete;

    const BoxShape& shape() const { return shape_; }

    const QuantumClass& product(const BoxedPartition& lambda, const BoxedPartition& mu) const;

    /// Bilinear extension of product, with q-degrees adding.
    QuantumClass multiply(const QuantumClass& a, const QuantumClass& b) const;

    /// sigma of the single column (1^m) for 0 <= m <= k, otherwise zero.
    QuantumClass elementary(int m) const;
    /// sigma of the single row (m) for 0 <= m <= n-k, otherwise zero.
    QuantumClass complete(int m) const;

    QuantumClass one() const;

    const SchurProductCache& schur_cache() const { return schur_; }

private:
    struct Memo;
    BoxShape shape_;
    SchurProductCache schur_;
    std::unique_ptr<Memo> memo_;
};

struct RectangleProduct {
    int rims;
    BoxedPartition partition;
};

/// sigma_(a^k) * sigma_lambda = q^m sigma_lambda', obtained by widening lambda
/// by a columns and stripping n-rims. Cross-checked against the full product.
RectangleProduct rectangle_multiply(const QuantumRing& ring, int a, const BoxedPartition& lambda);

/// Evaluates det(e_{lambda'_i + j - i}) over the conjugate partition with
/// quantum products and reports whether it equals sigma_lambda.
bool giambelli_check(const QuantumRing& ring, const BoxedPartition& lambda);

struct PresentationReport {
    BoxShape shape;
    /// h_m for m = n-k .. n, computed by the e/h recursion.
    std::vector<std::pair<int, QuantumClass>> complete;
};

/// Runs the recursion h_m = sum_{i=1..k} (-1)^(i-1) e_i h_{m-i} past the
/// box width and asserts h_{n-k+1} = ... = h_{n-1} = 0 and
/// h_n = (-1)^(k-1) q. Throws ConsistencyError otherwise.
PresentationReport presentation_check(const QuantumRing& ring);

}  // namespace qschubert
