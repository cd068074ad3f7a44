#include "qschubert/sweeps.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "qschubert/degree_analysis.hpp"
#include "qschubert/error.hpp"
#include "qschubert/fusion.hpp"
#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/monomial_oracle.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/rim_hook.hpp"

namespace qschubert {

namespace {

constexpr std::size_t kKeptFailures = 10;

std::string pair_name(const BoxedPartition& lambda, const BoxedPartition& mu) {
    return "Gr(" + lambda.shape().to_string() + ") (" + lambda.partition().to_string() + ")*(" +
           mu.partition().to_string() + ")";
}

// Runs `check` over `count` items in parallel; an empty string is a pass,
// anything else (including a library exception) is a failure.
template <typename Check>
void run_checks(std::size_t count, unsigned jobs, SweepResult& result, const Check& check) {
    std::vector<std::string> outcome(count);
    parallel_for(count, jobs, [&](std::size_t i) {
        try {
            outcome[i] = check(i);
        } catch (const Error& e) {
            outcome[i] = std::string(e.what());
            if (outcome[i].empty()) outcome[i] = "error";
        }
    });
    for (auto& message : outcome) {
        ++result.checked;
        if (!message.empty()) result.fail(std::move(message));
    }
}

template <typename Check>
void over_pairs(const QuantumRing& ring, unsigned jobs, SweepResult& result, const Check& check) {
    const auto parts = boxed_partitions(ring.shape());
    const std::size_t count = parts.size();
    run_checks(count * count, jobs, result,
               [&](std::size_t i) { return check(parts[i / count], parts[i % count]); });
}

}  // namespace

void SweepResult::fail(std::string message) {
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(std::move(message));
}

void SweepResult::merge(SweepResult other) {
    checked += other.checked;
    failure_count += other.failure_count;
    for (auto& f : other.failures) {
        if (failures.size() < kKeptFailures) failures.push_back(std::move(f));
    }
}

const QuantumRing& RingPool::ring(const BoxShape& shape) {
    std::lock_guard lock(mutex_);
    auto& slot = rings_[shape];
    if (!slot) slot = std::make_unique<QuantumRing>(shape);
    return *slot;
}

std::vector<BoxShape> shapes_up_to(int max_n) {
    std::vector<BoxShape> out;
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; k < n; ++k) out.emplace_back(k, n);
    }
    return out;
}

SweepResult sweep_path_round_trip(int max_n) {
    SweepResult result{"path round trip"};
    for (const auto& shape : shapes_up_to(max_n)) {
        for (const auto& lambda : boxed_partitions(shape)) {
            ++result.checked;
            auto path = partition_to_path(lambda);
            auto ranks = schubert_rank_vector(lambda);
            if (path_to_partition(shape, path) != lambda) result.fail("round trip failed for (" + lambda.partition().to_string() + ")");
            if (ranks.back() != shape.k() || !std::is_sorted(ranks.begin(), ranks.end())) {
                result.fail("bad rank vector for (" + lambda.partition().to_string() + ")");
            }
        }
    }
    return result;
}

SweepResult sweep_duality(int max_n) {
    SweepResult result{"duality involution"};
    for (const auto& shape : shapes_up_to(max_n)) {
        for (const auto& lambda : boxed_partitions(shape)) {
            ++result.checked;
            auto d = dual(lambda);
            if (dual(d) != lambda || lambda.weight() + d.weight() != shape.cells()) {
                result.fail("duality failed for (" + lambda.partition().to_string() + ") in Gr(" + shape.to_string() + ")");
            }
        }
    }
    return result;
}

SweepResult sweep_rim_orders(int max_n, unsigned jobs) {
    SweepResult result{"rim reduction: abacus vs single-hook removal"};
    for (const auto& shape : shapes_up_to(max_n)) {
        std::vector<Partition> domain;
        for (int w = 0; w <= 3 * shape.n(); ++w) {
            for (auto& p : partitions_of(w, shape.k())) domain.push_back(std::move(p));
        }
        run_checks(domain.size(), jobs, result, [&](std::size_t i) -> std::string {
            const auto& rho = domain[i];
            auto abacus = rim_reduce(rho, shape);
            auto outcomes = rim_reduce_all_orders(rho, shape);
            RimOutcome expected = abacus.is_zero()
                                      ? RimOutcome{true, Partition{}, 0, 0}
                                      : RimOutcome{false, abacus.partition().partition(), abacus.rims(), abacus.sign()};
            if (outcomes.size() != 1 || *outcomes.begin() != expected) {
                return "Gr(" + shape.to_string() + ") rho=(" + rho.to_string() + "): " + std::to_string(outcomes.size()) +
                       " distinct outcomes or disagreement with the abacus";
            }
            if (!abacus.is_zero() && rho.weight() != abacus.partition().weight() + abacus.rims() * shape.n()) {
                return "weight not conserved for rho=(" + rho.to_string() + ")";
            }
            return {};
        });
    }
    return result;
}

SweepResult sweep_lr_symmetry(int max_weight) {
    SweepResult result{"LR symmetry"};
    for (int total = 0; total <= max_weight; ++total) {
        const auto outer = partitions_of(total, total);
        for (int a = 0; a <= total; ++a) {
            const auto lefts = partitions_of(a, a);
            const auto rights = partitions_of(total - a, total - a);
            for (const auto& lambda : lefts) {
                for (const auto& mu : rights) {
                    for (const auto& nu : outer) {
                        if (!nu.contains(lambda) || !nu.contains(mu)) continue;
                        ++result.checked;
                        if (lr_coefficient(lambda, mu, nu) != lr_coefficient(mu, lambda, nu)) {
                            result.fail("c(" + lambda.to_string() + "; " + mu.to_string() + "; " + nu.to_string() +
                                        ") not symmetric");
                        }
                    }
                }
            }
        }
    }
    return result;
}

SweepResult sweep_lr_vs_monomials(int max_rows, int max_weight, unsigned jobs) {
    SweepResult result{"LR tableaux vs monomial expansion"};
    std::vector<Partition> domain;
    for (int w = 0; w <= max_weight; ++w) {
        for (auto& p : partitions_of(w, max_rows)) domain.push_back(std::move(p));
    }
    const std::size_t count = domain.size();
    run_checks(count * count, jobs, result, [&](std::size_t i) -> std::string {
        const auto& lambda = domain[i / count];
        const auto& mu = domain[i % count];
        auto tableau = schur_product_k_rows(lambda, mu, max_rows);
        auto oracle = schur_expand_monomials({lambda, mu}, max_rows);
        std::map<Partition, Coefficient> from_tableaux(tableau.terms().begin(), tableau.terms().end());
        if (from_tableaux != oracle) return "(" + lambda.to_string() + ")*(" + mu.to_string() + ") disagrees";
        return {};
    });
    return result;
}

SweepResult sweep_classical_pairing(RingPool& pool, int max_n) {
    SweepResult result{"classical pairing and nonvanishing"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        const Partition top(std::vector<int>(static_cast<std::size_t>(shape.k()), shape.width()));
        over_pairs(ring, 1, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            auto product = classical_product(lambda, mu);
            const bool is_dual = mu == dual(lambda);
            if (product.coefficient(top) != (is_dual ? 1 : 0)) return pair_name(lambda, mu) + ": pairing with the top class";
            const bool contained = dual(mu).partition().contains(lambda.partition());
            if (product.empty() == contained) return pair_name(lambda, mu) + ": nonvanishing criterion";
            return {};
        });
    }
    return result;
}

SweepResult sweep_pieri(int max_row, int max_weight) {
    SweepResult result{"Pieri rule"};
    for (int p = 0; p <= max_row; ++p) {
        const Partition row = p == 0 ? Partition{} : Partition{p};
        for (int w = 0; w <= max_weight; ++w) {
            for (const auto& mu : partitions_of(w, w)) {
                ++result.checked;
                const int rows = mu.length() + 1;
                // Horizontal strips: mu_i <= nu_i <= mu_{i-1}.
                std::set<Partition> strips;
                std::vector<int> nu(static_cast<std::size_t>(rows), 0);
                auto rec = [&](auto&& self, int i, int remaining) -> void {
                    if (i == rows) {
                        if (remaining == 0) strips.insert(Partition(nu));
                        return;
                    }
                    int lo = mu[static_cast<std::size_t>(i)];
                    int hi = i == 0 ? lo + remaining : mu[static_cast<std::size_t>(i - 1)];
                    for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
                        nu[i] = v;
                        self(self, i + 1, remaining - (v - lo));
                    }
                };
                rec(rec, 0, p);
                auto product = schur_product_k_rows(row, mu, rows);
                bool ok = product.size() == strips.size();
                for (const auto& [nu_p, c] : product.terms()) ok = ok && c == 1 && strips.contains(nu_p);
                if (!ok) result.fail("Pieri failed for (" + std::to_string(p) + ")*(" + mu.to_string() + ")");
            }
        }
    }
    return result;
}

SweepResult sweep_positivity(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"nonvanishing and positivity"};
    for (const auto& shape : shapes_up_to(max_n)) {
        over_pairs(pool.ring(shape), jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            // The product itself asserts both properties; recheck the returned value.
            const auto& product = pool.ring(shape).product(lambda, mu);
            if (product.is_zero() || !product.all_positive()) return pair_name(lambda, mu);
            return {};
        });
    }
    return result;
}

SweepResult sweep_commutativity_grading(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"commutativity, grading, classical layer"};
    for (const auto& shape : shapes_up_to(max_n)) {
        over_pairs(pool.ring(shape), jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            // The memo is symmetric by construction, so compare fresh products.
            auto forward = quantum_product(lambda, mu);
            auto backward = quantum_product(mu, lambda);
            if (forward != backward) return pair_name(lambda, mu) + ": not commutative";
            for (const auto& [key, c] : forward.terms()) {
                if (key.nu.weight() != lambda.weight() + mu.weight() - key.degree * shape.n()) {
                    return pair_name(lambda, mu) + ": grading violated";
                }
            }
            if (forward.layer(0) != classical_product(lambda, mu)) return pair_name(lambda, mu) + ": d=0 layer differs";
            return {};
        });
    }
    return result;
}

SweepResult sweep_associativity(RingPool& pool, int exhaustive_n, int sampled_n, int samples, std::uint64_t seed,
                                unsigned jobs) {
    SweepResult result{"associativity"};
    for (const auto& shape : shapes_up_to(std::max(exhaustive_n, sampled_n))) {
        const auto& ring = pool.ring(shape);
        const auto parts = boxed_partitions(shape);
        const std::size_t count = parts.size();
        std::vector<std::array<std::size_t, 3>> triples;
        if (shape.n() <= exhaustive_n) {
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = 0; b < count; ++b)
                    for (std::size_t c = 0; c < count; ++c) triples.push_back({a, b, c});
        } else {
            std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(shape.k()) << 32) ^ static_cast<std::uint64_t>(shape.n()));
            std::uniform_int_distribution<std::size_t> pick(0, count - 1);
            for (int i = 0; i < samples; ++i) triples.push_back({pick(rng), pick(rng), pick(rng)});
        }
        run_checks(triples.size(), jobs, result, [&](std::size_t i) -> std::string {
            auto [a, b, c] = triples[i];
            auto x = QuantumClass::basis(parts[a]);
            auto y = QuantumClass::basis(parts[b]);
            auto z = QuantumClass::basis(parts[c]);
            if (ring.multiply(ring.multiply(x, y), z) != ring.multiply(x, ring.multiply(y, z))) {
                return pair_name(parts[a], parts[b]) + "*(" + parts[c].partition().to_string() + ") not associative";
            }
            return {};
        });
    }
    return result;
}

SweepResult sweep_s3_symmetry(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"S3 symmetry of three-point numbers"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        const auto parts = boxed_partitions(shape);
        const std::size_t count = parts.size();
        run_checks(count * count * count, jobs, result, [&](std::size_t i) -> std::string {
            const auto& l = parts[i / (count * count)];
            const auto& m = parts[(i / count) % count];
            const auto& r = parts[i % count];
            const int total = l.weight() + m.weight() + r.weight() - shape.cells();
            if (total < 0 || total % shape.n() != 0) return {};
            const int d = total / shape.n();
            auto number = [&](const BoxedPartition& a, const BoxedPartition& b, const BoxedPartition& c) {
                return ring.product(a, b).coefficient(d, dual(c).partition());
            };
            const auto base = number(l, m, r);
            if (number(m, l, r) != base || number(l, r, m) != base || number(r, m, l) != base ||
                number(m, r, l) != base || number(r, l, m) != base) {
                return pair_name(l, m) + " with (" + r.partition().to_string() + "): three-point number not symmetric";
            }
            return {};
        });
    }
    return result;
}

SweepResult sweep_giambelli(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"quantum Giambelli"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        const auto parts = boxed_partitions(shape);
        run_checks(parts.size(), jobs, result, [&](std::size_t i) -> std::string {
            if (!giambelli_check(ring, parts[i])) {
                return "Gr(" + shape.to_string() + ") (" + parts[i].partition().to_string() + ")";
            }
            return {};
        });
    }
    return result;
}

SweepResult sweep_presentation(RingPool& pool, int max_n) {
    SweepResult result{"presentation relations"};
    for (const auto& shape : shapes_up_to(max_n)) {
        ++result.checked;
        try {
            presentation_check(pool.ring(shape));
        } catch (const Error& e) {
            result.fail(e.what());
        }
    }
    return result;
}

SweepResult sweep_rectangle_rule(RingPool& pool, int max_n) {
    SweepResult result{"rectangle rule"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        for (const auto& lambda : boxed_partitions(shape)) {
            for (int a = 0; a <= shape.width(); ++a) {
                ++result.checked;
                try {
                    rectangle_multiply(ring, a, lambda);
                } catch (const Error& e) {
                    result.fail(e.what());
                }
            }
        }
    }
    return result;
}

SweepResult sweep_min_degree(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"minimal degree equals largest square"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        over_pairs(ring, jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            const int d = dmin(lambda, mu);
            if (*ring.product(lambda, mu).degrees().begin() != d) return pair_name(lambda, mu) + ": min degree != dmin";
            if (dmin(mu, lambda) != d) return pair_name(lambda, mu) + ": dmin not symmetric";
            const bool classical_nonzero = !classical_product(lambda, mu).empty();
            const bool contained = dual(mu).partition().contains(lambda.partition());
            if ((d == 0) != classical_nonzero || classical_nonzero != contained) {
                return pair_name(lambda, mu) + ": dmin = 0 criterion";
            }
            return {};
        });
    }
    return result;
}

SweepResult sweep_degree_interval(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"degree support is an interval"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        over_pairs(ring, jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            degree_support(ring, lambda, mu);
            return {};
        });
    }
    return result;
}

SweepResult sweep_torus_slide(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"torus slide gives the largest degree"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        over_pairs(ring, jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            dmax_slide(ring, lambda, mu);
            return {};
        });
    }
    return result;
}

SweepResult sweep_belkale(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"minimal term from any maximal square"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        over_pairs(ring, jobs, result, [&](const BoxedPartition& lambda, const BoxedPartition& mu) -> std::string {
            // minimal_term asserts choice independence and agreement with the layer.
            minimal_term(ring, lambda, mu);
            return {};
        });
    }
    return result;
}

SweepResult sweep_fusion(RingPool& pool, int max_n, unsigned jobs) {
    SweepResult result{"fusion oracle agreement"};
    for (const auto& shape : shapes_up_to(max_n)) {
        const auto& ring = pool.ring(shape);
        try {
            auto table = character_table(shape);
            auto report = verify_quantum_vs_fusion(ring, table, jobs);
            result.checked += report.pairs;
            // Nonvanishing from the fusion side alone.
            for (const auto& lambda : table.partitions()) {
                for (const auto& mu : table.partitions()) {
                    if (fusion_product(table, lambda, mu).coefficients.empty()) result.fail(pair_name(lambda, mu) + ": fusion product is zero");
                }
            }
            const BoxedPartition top(shape, Partition(std::vector<int>(static_cast<std::size_t>(shape.k()), shape.width())));
            ++result.checked;
            if (fusion_product(table, top, top).coefficients.size() != 1 || ring.product(top, top).terms().size() != 1) {
                result.fail("Gr(" + shape.to_string() + "): top * top is not a single term");
            }
        } catch (const Error& e) {
            ++result.checked;
            result.fail(e.what());
        }
    }
    return result;
}

std::vector<SweepResult> run_all_sweeps(RingPool& pool, int max_n, unsigned jobs) {
    std::vector<SweepResult> out;
    out.push_back(sweep_path_round_trip(max_n));
    out.push_back(sweep_duality(max_n));
    out.push_back(sweep_rim_orders(max_n, jobs));
    out.push_back(sweep_lr_symmetry(std::min(2 * max_n, 12)));
    out.push_back(sweep_lr_vs_monomials(4, std::min(max_n, 8), jobs));
    out.push_back(sweep_pieri(std::min(max_n, 5), std::min(max_n, 8)));
    out.push_back(sweep_classical_pairing(pool, max_n));
    out.push_back(sweep_positivity(pool, max_n, jobs));
    out.push_back(sweep_commutativity_grading(pool, max_n, jobs));
    out.push_back(sweep_associativity(pool, std::min(max_n, 6), max_n, 1000, 20240601, jobs));
    out.push_back(sweep_s3_symmetry(pool, std::min(max_n, 6), jobs));
    out.push_back(sweep_giambelli(pool, max_n, jobs));
    out.push_back(sweep_presentation(pool, max_n));
    out.push_back(sweep_rectangle_rule(pool, max_n));
    out.push_back(sweep_min_degree(pool, max_n, jobs));
    out.push_back(sweep_degree_interval(pool, max_n, jobs));
    out.push_back(sweep_torus_slide(pool, max_n, jobs));
    out.push_back(sweep_belkale(pool, max_n, jobs));
    out.push_back(sweep_fusion(pool, std::min(max_n, CharacterTable::kMaxN), jobs));
    return out;
}

}  // namespace qschubert
