#include "qschubert/rim_hook.hpp"

#include <algorithm>
#include <map>

#include "qschubert/error.hpp"

namespace qschubert {

RimReduction RimReduction::reduced(BoxedPartition nu, int rims, int sign) {
    RimReduction r;
    r.nu_ = std::move(nu);
    r.rims_ = rims;
    r.sign_ = sign;
    return r;
}

const BoxedPartition& RimReduction::partition() const {
    if (!nu_) throw ConsistencyError("partition() requested from a zero rim reduction");
    return *nu_;
}

RimReduction rim_reduce(const Partition& rho, const BoxShape& shape) {
    const int k = shape.k();
    const int n = shape.n();
    if (rho.length() > k) {
        throw InvalidInput("rim reduction needs at most " + std::to_string(k) + " rows, got (" + rho.to_string() + ")");
    }
    auto beta = beta_numbers(rho, k);
    int rims = 0;
    for (int& b : beta) {
        rims += b / n;
        b %= n;
    }
    // Inversions of the reduced sequence against strictly decreasing order.
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (beta[i] == beta[j]) return RimReduction::zero();
            if (beta[i] < beta[j]) ++inversions;
        }
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parts[i] = beta[i] - (k - 1 - i);
    int parity = inversions + rims * (k - 1);
    return RimReduction::reduced(BoxedPartition(shape, Partition(std::move(parts))), rims,
                                 parity % 2 == 0 ? 1 : -1);
}

std::vector<RimHook> removable_rim_hooks(const Partition& rho, int size) {
    std::vector<RimHook> hooks;
    const int rows = rho.length();
    auto part = [&](int row) { return rho[static_cast<std::size_t>(row - 1)]; };  // 1-based, 0 past the end
    for (int top = 1; top <= rows; ++top) {
        // Rows top..bottom-1 keep exactly one column of overlap with the row below.
        int used = 0;
        for (int bottom = top; bottom <= rows; ++bottom) {
            int remaining = size - used;
            if (remaining <= 0) break;
            // In the bottom row the strip occupies columns (kept, part(bottom)].
            int kept = part(bottom) - remaining;
            if (kept >= part(bottom + 1) && kept < part(bottom)) {
                auto parts = rho.padded(rows);
                for (int i = top; i < bottom; ++i) parts[i - 1] = part(i + 1) - 1;
                parts[bottom - 1] = kept;
                hooks.push_back({Partition(std::move(parts)), bottom - top + 1});
            }
            used += part(bottom) - part(bottom + 1) + 1;
            if (part(bottom + 1) == 0) break;
        }
    }
    return hooks;
}

namespace {

using OutcomeMemo = std::map<Partition, std::set<RimOutcome>>;

const std::set<RimOutcome>& reduce_all(const Partition& rho, const BoxShape& shape, OutcomeMemo& memo) {
    if (auto it = memo.find(rho); it != memo.end()) return it->second;
    std::set<RimOutcome> outcomes;
    if (shape.fits(rho)) {
        outcomes.insert({false, rho, 0, 1});
    } else {
        auto hooks = removable_rim_hooks(rho, shape.n());
        if (hooks.empty()) outcomes.insert({true, Partition{}, 0, 0});
        for (const auto& hook : hooks) {
            int hook_sign = (shape.k() - hook.height) % 2 == 0 ? 1 : -1;
            for (const auto& sub : reduce_all(hook.remainder, shape, memo)) {
                if (sub.zero) {
                    outcomes.insert(sub);
                } else {
                    outcomes.insert({false, sub.nu, sub.rims + 1, sub.sign * hook_sign});
                }
            }
        }
    }
    return memo.emplace(rho, std::move(outcomes)).first->second;
}

}  // namespace

std::set<RimOutcome> rim_reduce_all_orders(const Partition& rho, const BoxShape& shape) {
    if (rho.length() > shape.k()) throw InvalidInput("rim reduction needs at most k rows");
    OutcomeMemo memo;
    return reduce_all(rho, shape, memo);
}

}  // namespace qschubert
