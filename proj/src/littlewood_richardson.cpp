#include "qschubert/littlewood_richardson.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "qschubert/error.hpp"

namespace qschubert {

void SchurCombination::add(const Partition& p, const Coefficient& c) {
    if (c <= 0) throw ConsistencyError("SchurCombination coefficients must be positive");
    if (!terms_.empty() && terms_.begin()->first.weight() != p.weight()) {
        throw ConsistencyError("SchurCombination must be homogeneous");
    }
    terms_[p] += c;
}

Coefficient SchurCombination::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

std::string SchurCombination::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << '*';
        out << "s[" << p.to_string() << ']';
    }
    return out.str();
}

namespace {

// Depth-first count of LR tableaux. Cells are visited in reverse reading
// order (rows top to bottom, each row right to left), so the lattice
// condition can be enforced on every prefix.
class TableauCounter {
public:
    TableauCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : inner_(lambda.padded(nu.length())), outer_(nu.padded(nu.length())), content_(mu.padded(mu.length())) {
        const int rows = nu.length();
        fill_.resize(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            fill_[r].assign(static_cast<std::size_t>(outer_[r]), 0);
            for (int c = outer_[r] - 1; c >= inner_[r]; --c) cells_.push_back({r, c});
        }
        used_.assign(content_.size() + 1, 0);
    }

    std::uint64_t count() {
        total_ = 0;
        visit(0);
        return total_;
    }

private:
    struct Cell {
        int row;
        int col;
    };

    void visit(std::size_t index) {
        if (index == cells_.size()) {
            ++total_;
            return;
        }
        const auto [r, c] = cells_[index];
        int lo = 1;
        int hi = std::min(static_cast<int>(content_.size()), r + 1);
        if (c + 1 < outer_[r]) hi = std::min(hi, fill_[r][c + 1]);
        if (r > 0 && c >= inner_[r - 1]) lo = std::max(lo, fill_[r - 1][c] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (used_[v] >= content_[v - 1]) continue;
            if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
            fill_[r][c] = v;
            ++used_[v];
            visit(index + 1);
            --used_[v];
        }
        fill_[r][c] = 0;
    }

    std::vector<int> inner_;
    std::vector<int> outer_;
    std::vector<int> content_;
    std::vector<std::vector<int>> fill_;
    std::vector<Cell> cells_;
    std::vector<int> used_;
    std::uint64_t total_ = 0;
};

}  // namespace

Coefficient lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    // The enumeration is exponential in the content size; by symmetry the
    // lighter factor can always serve as content.
    const bool swap = lambda.weight() < mu.weight();
    TableauCounter counter(swap ? mu : lambda, swap ? lambda : mu, nu);
    return Coefficient(counter.count());
}

SchurCombination schur_product_k_rows(const Partition& lambda, const Partition& mu, int k) {
    if (lambda.length() > k || mu.length() > k) {
        throw InvalidInput("factors must have at most " + std::to_string(k) + " rows");
    }
    SchurCombination out;
    const int total = lambda.weight() + mu.weight();
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    // nu_i ranges over [max(lambda_i, mu_i), min(nu_{i-1}, lambda_i + mu_1)].
    auto rec = [&](auto&& self, int row, int bound, int remaining) -> void {
        if (row == k) {
            if (remaining != 0) return;
            Partition nu(parts);
            auto c = lr_coefficient(lambda, mu, nu);
            if (c != 0) out.add(nu, c);
            return;
        }
        const auto r = static_cast<std::size_t>(row);
        int lo = std::max(lambda[r], mu[r]);
        int hi = std::min({bound, lambda[r] + mu[0], remaining});
        for (int v = hi; v >= lo; --v) {
            if (v * (k - row) < remaining) break;
            parts[r] = v;
            self(self, row + 1, v, remaining - v);
        }
        parts[r] = 0;
    };
    rec(rec, 0, total, total);
    return out;
}

SchurCombination classical_product(const BoxedPartition& lambda, const BoxedPartition& mu) {
    if (lambda.shape() != mu.shape()) throw InvalidInput("factors belong to different shapes");
    const auto& shape = lambda.shape();
    SchurCombination out;
    if (lambda.weight() + mu.weight() > shape.cells()) return out;
    const auto expanded = schur_product_k_rows(lambda.partition(), mu.partition(), shape.k());
    for (const auto& [nu, c] : expanded.terms()) {
        if (shape.fits(nu)) out.add(nu, c);
    }
    return out;
}

struct SchurProductCache::Impl {
    struct KeyHash {
        std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
            PartitionHash h;
            return h(key.first) * 31 + h(key.second);
        }
    };
    mutable std::shared_mutex mutex;
    std::unordered_map<std::pair<Partition, Partition>, SchurCombination, KeyHash> table;
};

SchurProductCache::SchurProductCache(int k) : k_(k), impl_(std::make_unique<Impl>()) {}
SchurProductCache::~SchurProductCache() = default;

const SchurCombination& SchurProductCache::product(const Partition& lambda, const Partition& mu) const {
    auto key = lambda <= mu ? std::pair{lambda, mu} : std::pair{mu, lambda};
    {
        std::shared_lock lock(impl_->mutex);
        if (auto it = impl_->table.find(key); it != impl_->table.end()) return it->second;
    }
    auto value = schur_product_k_rows(key.first, key.second, k_);
    std::unique_lock lock(impl_->mutex);
    // Concurrent inserts of the same key carry identical values; first wins.
    return impl_->table.try_emplace(std::move(key), std::move(value)).first->second;
}

std::size_t SchurProductCache::size() const {
    std::shared_lock lock(impl_->mutex);
    return impl_->table.size();
}

}  // namespace qschubert
