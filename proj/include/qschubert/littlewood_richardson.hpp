#pragma once

#include <functional>
#include <map>
#include <memory>

#include "qschubert/coefficient.hpp"
#include "qschubert/partition.hpp"

namespace qschubert {

/// A homogeneous combination of Schur functions (or Schubert classes) with
/// positive coefficients. Terms iterate in descending lexicographic order.
class SchurCombination {
public:
    using Terms = std::map<Partition, Coefficient, std::greater<>>;

    SchurCombination() = default;

    /// Adds `c` to the coefficient of `p`. Adding a nonpositive value, or a
    /// partition of a different weight than the existing terms, throws.
    void add(const Partition& p, const Coefficient& c);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Zero when p is absent.
    Coefficient coefficient(const Partition& p) const;

    /// Weight shared by all terms; -1 for the empty combination.
    int weight() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

    std::string to_string() const;

    friend bool operator==(const SchurCombination&, const SchurCombination&) = default;

private:
    Terms terms_;
};

/// Number of LR tableaux of shape nu/lambda and content mu: semistandard
/// fillings whose reverse reading word is a lattice word. Zero unless
/// |nu| = |lambda| + |mu| and lambda, mu sit inside nu.
Coefficient lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda * s_mu expanded in Schur functions, keeping only terms with at
/// most k rows. Throws InvalidInput if either factor has more than k rows.
SchurCombination schur_product_k_rows(const Partition& lambda, const Partition& mu, int k);

/// Classical product of Schubert classes in H*(Gr(k,n)).
SchurCombination classical_product(const BoxedPartition& lambda, const BoxedPartition& mu);

/// Thread-safe insert-only memo of schur_product_k_rows, keyed with the
/// smaller factor first so that each unordered pair is stored once.
class SchurProductCache {
public:
    explicit SchurProductCache(int k);
    ~SchurProductCache();
    SchurProductCache(const SchurProductCache&) = delete;
    SchurProductCache& operator=(const SchurProductCache&) = delete;

    int k() const { return k_; }
    const SchurCombination& product(const Partition& lambda, const Partition& mu) const;
    std::size_t size() const;

private:
    struct Impl;
    int k_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qschubert
