#include "qschubert/monomial_oracle.hpp"

#include <algorithm>
#include <functional>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

using Exponent = std::vector<int>;
// Lexicographically largest monomial first.
using Polynomial = std::map<Exponent, Coefficient, std::greater<>>;

constexpr double kMonomialGuard = 1e7;

double monomial_count(int degree, int variables) {
    // C(degree + variables - 1, variables - 1)
    double count = 1;
    for (int i = 1; i < variables; ++i) count = count * (degree + i) / i;
    return count;
}

// s_lambda in m variables: one monomial per semistandard tableau.
Polynomial schur_polynomial(const Partition& lambda, int m) {
    Polynomial poly;
    if (lambda.length() > m) return poly;
    const int rows = lambda.length();
    std::vector<std::vector<int>> tableau(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) tableau[r].assign(static_cast<std::size_t>(lambda[r]), 0);
    Exponent exponent(static_cast<std::size_t>(m), 0);
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            poly[exponent] += 1;
            return;
        }
        if (c == lambda[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tableau[r][c - 1]);
        if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            tableau[r][c] = v;
            ++exponent[v - 1];
            self(self, r, c + 1);
            --exponent[v - 1];
        }
    };
    fill(fill, 0, 0);
    return poly;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    Exponent e;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    }
    return out;
}

}  // namespace

std::map<Partition, Coefficient> schur_expand_monomials(const std::vector<Partition>& lambdas, int m) {
    if (m <= 0) throw InvalidInput("number of variables must be positive");
    int degree = 0;
    for (const auto& lambda : lambdas) {
        if (lambda.length() > m) throw InvalidInput("partition (" + lambda.to_string() + ") has more than m parts");
        degree += lambda.weight();
    }
    if (monomial_count(degree, m) > kMonomialGuard) {
        throw ResourceLimit("monomial expansion in " + std::to_string(m) + " variables of degree " +
                            std::to_string(degree) + " exceeds the 10^7 guard");
    }

    Polynomial product;
    product[Exponent(static_cast<std::size_t>(m), 0)] = 1;
    for (const auto& lambda : lambdas) product = multiply(product, schur_polynomial(lambda, m));

    std::map<Partition, Coefficient> expansion;
    while (true) {
        while (!product.empty() && product.begin()->second == 0) product.erase(product.begin());
        if (product.empty()) break;
        auto [lead, c] = *product.begin();
        // A symmetric polynomial's leading monomial has weakly decreasing exponents.
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>())) {
            throw ConsistencyError("monomial expansion produced a non-symmetric product");
        }
        Partition nu(lead);
        expansion[nu] = c;
        for (const auto& [e, coeff] : schur_polynomial(nu, m)) product[e] -= c * coeff;
    }
    return expansion;
}

}  // namespace qschubert
