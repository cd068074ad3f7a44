#include "qschubert/degree_analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "qschubert/error.hpp"
#include "qschubert/rim_hook.hpp"

namespace qschubert {

namespace {

void require_same_shape(const BoxedPartition& a, const BoxedPartition& b) {
    if (a.shape() != b.shape()) throw InvalidInput("partitions belong to different shapes");
}

bool square_fits(const Partition& inside, const Partition& outside, int size, int row, int col) {
    // Both diagrams are order ideals: the square is inside `inside` iff its
    // SE cell is, and misses `outside` iff its NW cell does.
    return has_cell(inside, row + size - 1, col + size - 1) && !has_cell(outside, row, col);
}

std::vector<SquarePlacement> placements(const BoxedPartition& lambda, const BoxedPartition& mu, int size) {
    const auto& shape = lambda.shape();
    const auto mu_dual = dual(mu).partition();
    std::vector<SquarePlacement> out;
    for (int row = 1; row + size - 1 <= shape.k(); ++row) {
        for (int col = 1; col + size - 1 <= shape.width(); ++col) {
            if (square_fits(lambda.partition(), mu_dual, size, row, col)) out.push_back({size, row, col});
        }
    }
    return out;
}

std::string pair_label(const BoxedPartition& lambda, const BoxedPartition& mu) {
    return "(" + lambda.partition().to_string() + ") * (" + mu.partition().to_string() + ") in Gr(" +
           lambda.shape().to_string() + ")";
}

int index_on(const std::vector<LatticePoint>& points, LatticePoint target) {
    auto it = std::find(points.begin(), points.end(), target);
    return it == points.end() ? -1 : static_cast<int>(it - points.begin());
}

BoxedPartition widen_and_reduce(const BoxedPartition& p, int columns, const std::string& label) {
    const auto& shape = p.shape();
    auto reduction = rim_reduce(add_left_rectangle(p.partition(), columns, shape.k()), shape);
    if (reduction.is_zero() || reduction.sign() != 1) {
        throw ConsistencyError("rectangle reduction of (" + p.partition().to_string() + ") by " +
                               std::to_string(columns) + " columns is not a positive class (" + label + ")");
    }
    return reduction.partition();
}

}  // namespace

int dmin(const BoxedPartition& lambda, const BoxedPartition& mu) {
    require_same_shape(lambda, mu);
    const auto& shape = lambda.shape();
    for (int size = std::min(shape.k(), shape.width()); size >= 1; --size) {
        if (!placements(lambda, mu, size).empty()) return size;
    }
    return 0;
}

std::vector<SquarePlacement> maximal_squares(const BoxedPartition& lambda, const BoxedPartition& mu) {
    int size = dmin(lambda, mu);
    if (size == 0) return {};
    return placements(lambda, mu, size);
}

BelkaleReduction belkale_reduce(const BoxedPartition& lambda, const BoxedPartition& mu,
                                const std::optional<SquarePlacement>& square) {
    require_same_shape(lambda, mu);
    const auto& shape = lambda.shape();
    const int d = dmin(lambda, mu);
    if (!square) {
        if (d != 0) throw InvalidInput("a maximal square is required when dmin > 0");
        return {0, 0, lambda, mu};
    }
    auto maximal = placements(lambda, mu, d);
    if (d == 0 || square->size != d || std::find(maximal.begin(), maximal.end(), *square) == maximal.end()) {
        throw InvalidInput("square is not a maximal placement for " + pair_label(lambda, mu));
    }

    const int s = square->size;
    const LatticePoint south_east{square->row + s - 1, square->col + s - 1};
    const LatticePoint north_west{square->row - 1, square->col - 1};
    const int a = index_on(path_points(lambda), south_east);
    auto dual_points = path_points(dual(mu));
    std::reverse(dual_points.begin(), dual_points.end());
    const int b = index_on(dual_points, north_west);
    if (a < 0 || b < 0) {
        throw ConsistencyError("maximal square corner off its boundary path for " + pair_label(lambda, mu));
    }

    auto label = pair_label(lambda, mu);
    BelkaleReduction out{a, b, widen_and_reduce(lambda, a, label), widen_and_reduce(mu, b, label)};
    if (out.lambda_prime.weight() + out.mu_prime.weight() != lambda.weight() + mu.weight() - d * shape.n()) {
        throw ConsistencyError("reduced weights do not match the q^" + std::to_string(d) + " layer for " + label);
    }
    return out;
}

SchurCombination minimal_term(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu) {
    require_same_shape(lambda, mu);
    const int d = dmin(lambda, mu);
    std::optional<SchurCombination> term;
    if (d == 0) {
        term = classical_product(lambda, mu);
    } else {
        for (const auto& square : maximal_squares(lambda, mu)) {
            auto reduction = belkale_reduce(lambda, mu, square);
            auto candidate = classical_product(reduction.lambda_prime, reduction.mu_prime);
            if (term && *term != candidate) {
                throw ConsistencyError("minimal term depends on the choice of square for " + pair_label(lambda, mu));
            }
            term = std::move(candidate);
        }
    }
    if (*term != ring.product(lambda, mu).layer(d)) {
        throw ConsistencyError("minimal term " + term->to_string() + " differs from the q^" + std::to_string(d) +
                               " layer for " + pair_label(lambda, mu));
    }
    return *term;
}

std::set<int> degree_support(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu) {
    auto degrees = ring.product(lambda, mu).degrees();
    if (degrees.empty() ||
        *degrees.rbegin() - *degrees.begin() + 1 != static_cast<int>(degrees.size())) {
        throw ConsistencyError("degree support is not an interval for " + pair_label(lambda, mu));
    }
    return degrees;
}

int torus_slide_degree(const BoxedPartition& lambda, const BoxedPartition& mu) {
    require_same_shape(lambda, mu);
    const auto& shape = lambda.shape();
    const int k = shape.k();
    const int width = shape.width();

    // A point of a periodic staircase is identified with its translates by
    // (k, -width); store the representative with row in [0, k).
    auto canonical = [&](int row, int col) -> long long {
        int q = row >= 0 ? row / k : -((-row + k - 1) / k);
        row -= q * k;
        col += q * width;
        return static_cast<long long>(col) * k + row;
    };

    std::unordered_set<long long> next_lambda;
    for (auto p : path_points(lambda)) next_lambda.insert(canonical(p.row, p.col + width));
    const auto mu_dual = path_points(dual(mu));

    const int start = dmin(lambda, mu);
    for (int t = start; t <= start + shape.n(); ++t) {
        for (auto p : mu_dual) {
            if (next_lambda.contains(canonical(p.row + t, p.col + t))) return t;
        }
    }
    throw ConsistencyError("torus slide never met lambda's path for " + pair_label(lambda, mu));
}

int dmax_slide(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu) {
    const int slide = torus_slide_degree(lambda, mu);
    const int authoritative = *degree_support(ring, lambda, mu).rbegin();
    if (slide != authoritative) {
        throw ConsistencyError("torus slide gives " + std::to_string(slide) + " but the product's largest degree is " +
                               std::to_string(authoritative) + " for " + pair_label(lambda, mu));
    }
    return slide;
}

}  // namespace qschubert
