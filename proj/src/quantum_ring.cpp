#include "qschubert/quantum_ring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "qschubert/error.hpp"
#include "qschubert/rim_hook.hpp"

namespace qschubert {

QuantumClass QuantumClass::basis(const BoxedPartition& nu, int degree) {
    QuantumClass out(nu.shape());
    out.add(degree, nu.partition(), 1);
    return out;
}

void QuantumClass::add(int degree, const Partition& nu, const Coefficient& c) {
    if (c == 0) return;
    if (degree < 0) throw ConsistencyError("negative q-degree");
    if (!shape_.fits(nu)) throw ConsistencyError("quantum class term (" + nu.to_string() + ") outside the box");
    QuantumKey key{degree, nu};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coefficient QuantumClass::coefficient(int degree, const Partition& nu) const {
    auto it = terms_.find(QuantumKey{degree, nu});
    return it == terms_.end() ? Coefficient(0) : it->second;
}

std::set<int> QuantumClass::degrees() const {
    std::set<int> out;
    for (const auto& [key, c] : terms_) out.insert(key.degree);
    return out;
}

SchurCombination QuantumClass::layer(int degree) const {
    SchurCombination out;
    for (const auto& [key, c] : terms_) {
        if (key.degree != degree) continue;
        if (c < 0) throw ConsistencyError("negative coefficient in q^" + std::to_string(degree) + " layer");
        out.add(key.nu, c);
    }
    return out;
}

bool QuantumClass::all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

QuantumClass& QuantumClass::operator+=(const QuantumClass& other) {
    if (other.shape_ != shape_) throw InvalidInput("adding classes of different shapes");
    for (const auto& [key, c] : other.terms_) add(key.degree, key.nu, c);
    return *this;
}

QuantumClass& QuantumClass::operator-=(const QuantumClass& other) {
    if (other.shape_ != shape_) throw InvalidInput("subtracting classes of different shapes");
    for (const auto& [key, c] : other.terms_) add(key.degree, key.nu, -c);
    return *this;
}

QuantumClass QuantumClass::scaled(const Coefficient& c) const {
    QuantumClass out(shape_);
    if (c == 0) return out;
    for (const auto& [key, value] : terms_) out.terms_.emplace(key, value * c);
    return out;
}

std::string QuantumClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << '*';
        if (key.degree == 1) out << "q*";
        if (key.degree > 1) out << "q^" << key.degree << '*';
        out << "s[" << key.nu.to_string() << ']';
    }
    return out.str();
}

namespace {

QuantumClass reduce_product(const BoxedPartition& lambda, const BoxedPartition& mu, const SchurCombination& schur) {
    const auto& shape = lambda.shape();
    QuantumClass out(shape);
    for (const auto& [rho, c] : schur.terms()) {
        auto reduction = rim_reduce(rho, shape);
        if (reduction.is_zero()) continue;
        out.add(reduction.rims(), reduction.partition().partition(), reduction.sign() * c);
    }
    auto label = [&] { return "sigma(" + lambda.partition().to_string() + ") * sigma(" + mu.partition().to_string() + ")"; };
    if (out.is_zero()) throw ConsistencyError(label() + " reduced to zero");
    if (!out.all_positive()) throw ConsistencyError(label() + " has a negative coefficient: " + out.to_string());
    return out;
}

void require_same_shape(const BoxedPartition& a, const BoxedPartition& b) {
    if (a.shape() != b.shape()) {
        throw InvalidInput("partitions belong to different shapes (" + a.shape().to_string() + " vs " +
                           b.shape().to_string() + ")");
    }
}

}  // namespace

QuantumClass quantum_product(const BoxedPartition& lambda, const BoxedPartition& mu) {
    require_same_shape(lambda, mu);
    auto schur = schur_product_k_rows(lambda.partition(), mu.partition(), lambda.shape().k());
    return reduce_product(lambda, mu, schur);
}

Coefficient quantum_lr(const BoxedPartition& lambda, const BoxedPartition& mu, const BoxedPartition& nu, int degree) {
    require_same_shape(lambda, mu);
    require_same_shape(lambda, nu);
    if (degree < 0) return 0;
    if (nu.weight() != lambda.weight() + mu.weight() - degree * lambda.shape().n()) return 0;
    return quantum_product(lambda, mu).coefficient(degree, nu.partition());
}

struct QuantumRing::Memo {
    struct KeyHash {
        std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
            PartitionHash h;
            return h(key.first) * 1000003u ^ h(key.second);
        }
    };
    mutable std::shared_mutex mutex;
    std::unordered_map<std::pair<Partition, Partition>, QuantumClass, KeyHash> table;
};

QuantumRing::QuantumRing(BoxShape shape) : shape_(shape), schur_(shape.k()), memo_(std::make_unique<Memo>()) {}
QuantumRing::~QuantumRing() = default;

const QuantumClass& QuantumRing::product(const BoxedPartition& lambda, const BoxedPartition& mu) const {
    require_same_shape(lambda, mu);
    if (lambda.shape() != shape_) throw InvalidInput("partition belongs to a different shape than the ring");
    const auto& a = lambda.partition();
    const auto& b = mu.partition();
    auto key = a <= b ? std::pair{a, b} : std::pair{b, a};
    {
        std::shared_lock lock(memo_->mutex);
        if (auto it = memo_->table.find(key); it != memo_->table.end()) return it->second;
    }
    auto value = reduce_product(lambda, mu, schur_.product(a, b));
    std::unique_lock lock(memo_->mutex);
    return memo_->table.try_emplace(std::move(key), std::move(value)).first->second;
}

QuantumClass QuantumRing::multiply(const QuantumClass& a, const QuantumClass& b) const {
    if (a.shape() != shape_ || b.shape() != shape_) throw InvalidInput("class belongs to a different shape");
    QuantumClass out(shape_);
    for (const auto& [ka, ca] : a.terms()) {
        BoxedPartition left(shape_, ka.nu);
        for (const auto& [kb, cb] : b.terms()) {
            Coefficient scale = ca * cb;
            for (const auto& [kp, cp] : product(left, BoxedPartition(shape_, kb.nu)).terms()) {
                out.add(ka.degree + kb.degree + kp.degree, kp.nu, scale * cp);
            }
        }
    }
    return out;
}

QuantumClass QuantumRing::elementary(int m) const {
    QuantumClass out(shape_);
    if (m >= 0 && m <= shape_.k() && (m == 0 || shape_.width() >= 1)) {
        out.add(0, Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), 1);
    }
    return out;
}

QuantumClass QuantumRing::complete(int m) const {
    QuantumClass out(shape_);
    if (m >= 0 && m <= shape_.width()) out.add(0, m == 0 ? Partition{} : Partition{m}, 1);
    return out;
}

QuantumClass QuantumRing::one() const { return complete(0); }

RectangleProduct rectangle_multiply(const QuantumRing& ring, int a, const BoxedPartition& lambda) {
    const auto& shape = ring.shape();
    if (lambda.shape() != shape) throw InvalidInput("partition belongs to a different shape than the ring");
    if (a < 0 || a > shape.width()) {
        throw InvalidInput("rectangle width " + std::to_string(a) + " outside [0, " + std::to_string(shape.width()) + "]");
    }
    auto reduction = rim_reduce(add_left_rectangle(lambda.partition(), a, shape.k()), shape);
    if (reduction.is_zero() || reduction.sign() != 1) {
        throw ConsistencyError("rectangle rule failed for a=" + std::to_string(a) + ", lambda=(" +
                               lambda.partition().to_string() + ")");
    }
    RectangleProduct result{reduction.rims(), reduction.partition()};
    BoxedPartition rectangle(shape, Partition(std::vector<int>(static_cast<std::size_t>(shape.k()), a)));
    if (ring.product(rectangle, lambda) != QuantumClass::basis(result.partition, result.rims)) {
        throw ConsistencyError("rectangle rule disagrees with the quantum product");
    }
    return result;
}

bool giambelli_check(const QuantumRing& ring, const BoxedPartition& lambda) {
    const auto& shape = ring.shape();
    if (lambda.shape() != shape) throw InvalidInput("partition belongs to a different shape than the ring");
    const auto conj = lambda.partition().conjugate();
    const int size = conj.length();

    // Entry (i, j) is e_{conj_i + j - i}; precompute the distinct classes.
    std::vector<QuantumClass> e;
    e.reserve(static_cast<std::size_t>(shape.k() + 1));
    for (int m = 0; m <= shape.k(); ++m) e.push_back(ring.elementary(m));
    auto entry = [&](int i, int j) -> const QuantumClass* {
        int m = conj[static_cast<std::size_t>(i)] + j - i;
        return (m >= 0 && m <= shape.k()) ? &e[static_cast<std::size_t>(m)] : nullptr;
    };

    // Permutation expansion row by row, skipping zero entries.
    QuantumClass det(shape);
    std::vector<bool> used(static_cast<std::size_t>(size), false);
    auto expand = [&](auto&& self, int row, const QuantumClass& partial, int sign) -> void {
        if (row == size) {
            det += sign > 0 ? partial : partial.scaled(-1);
            return;
        }
        int passed = 0;  // used columns to the right of the current one add inversions
        for (int col = size - 1; col >= 0; --col) {
            if (used[col]) {
                ++passed;
                continue;
            }
            const QuantumClass* value = entry(row, col);
            if (value == nullptr) continue;
            used[col] = true;
            self(self, row + 1, ring.multiply(partial, *value), passed % 2 == 0 ? sign : -sign);
            used[col] = false;
        }
    };
    expand(expand, 0, ring.one(), 1);
    return det == QuantumClass::basis(lambda);
}

PresentationReport presentation_check(const QuantumRing& ring) {
    const auto& shape = ring.shape();
    const int k = shape.k();
    const int n = shape.n();
    std::vector<QuantumClass> h;
    h.reserve(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= shape.width(); ++m) h.push_back(ring.complete(m));
    for (int m = shape.width() + 1; m <= n; ++m) {
        QuantumClass next(shape);
        for (int i = 1; i <= k && i <= m; ++i) {
            auto term = ring.multiply(ring.elementary(i), h[static_cast<std::size_t>(m - i)]);
            if (i % 2 == 1) {
                next += term;
            } else {
                next -= term;
            }
        }
        h.push_back(std::move(next));
    }

    PresentationReport report{shape, {}};
    for (int m = shape.width(); m <= n; ++m) report.complete.emplace_back(m, h[static_cast<std::size_t>(m)]);

    for (int m = shape.width() + 1; m < n; ++m) {
        if (!h[static_cast<std::size_t>(m)].is_zero()) {
            throw ConsistencyError("presentation relation failed: h_" + std::to_string(m) + " = " +
                                   h[static_cast<std::size_t>(m)].to_string() + " in Gr(" + shape.to_string() + ")");
        }
    }
    QuantumClass expected(shape);
    expected.add(1, Partition{}, k % 2 == 1 ? 1 : -1);
    if (h[static_cast<std::size_t>(n)] != expected) {
        throw ConsistencyError("presentation relation failed: h_" + std::to_string(n) + " = " +
                               h[static_cast<std::size_t>(n)].to_string() + ", expected " + expected.to_string());
    }
    return report;
}

}  // namespace qschubert
