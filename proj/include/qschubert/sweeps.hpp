#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qschubert/partition.hpp"
#include "qschubert/quantum_ring.hpp"

namespace qschubert {

/// Outcome of one exhaustive or sampled invariant check.
struct SweepResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failure_count = 0;
    std::vector<std::string> failures;  // first few, for diagnostics

    bool passed() const { return failure_count == 0 && checked > 0; }
    void fail(std::string message);
    void merge(SweepResult other);
};

/// One memoizing ring per shape, shared by all sweeps in a run.
class RingPool {
public:
    const QuantumRing& ring(const BoxShape& shape);

private:
    std::mutex mutex_;
    std::map<BoxShape, std::unique_ptr<QuantumRing>> rings_;
};

/// All shapes (k, n) with 2 <= n <= max_n and 0 < k < n, ordered by n then k.
std::vector<BoxShape> shapes_up_to(int max_n);

// Partitions and rim hooks.
SweepResult sweep_path_round_trip(int max_n);
SweepResult sweep_duality(int max_n);
/// Abacus reduction against removal of single rim hooks in every order, for
/// every rho with at most k rows and |rho| <= 3n.
SweepResult sweep_rim_orders(int max_n, unsigned jobs);

// Classical Littlewood-Richardson.
SweepResult sweep_lr_symmetry(int max_weight);
SweepResult sweep_lr_vs_monomials(int max_rows, int max_weight, unsigned jobs);
/// Top-class pairing and the containment criterion for classical products.
SweepResult sweep_classical_pairing(RingPool& pool, int max_n);
SweepResult sweep_pieri(int max_row, int max_weight);

// Quantum ring.
/// Positivity and nonvanishing of every product sigma_lambda * sigma_mu.
SweepResult sweep_positivity(RingPool& pool, int max_n, unsigned jobs);
/// Commutativity, grading, and agreement of the d = 0 layer with the
/// classical product.
SweepResult sweep_commutativity_grading(RingPool& pool, int max_n, unsigned jobs);
/// Exhaustive over triples for n <= exhaustive_n, `samples` random triples
/// per shape for exhaustive_n < n <= sampled_n.
SweepResult sweep_associativity(RingPool& pool, int exhaustive_n, int sampled_n, int samples, std::uint64_t seed,
                                unsigned jobs);
SweepResult sweep_s3_symmetry(RingPool& pool, int max_n, unsigned jobs);
SweepResult sweep_giambelli(RingPool& pool, int max_n, unsigned jobs);
SweepResult sweep_presentation(RingPool& pool, int max_n);
SweepResult sweep_rectangle_rule(RingPool& pool, int max_n);

// Degree analysis.
/// min(degree_support) = dmin, dmin symmetric, dmin = 0 iff the classical
/// product is nonzero iff lambda fits inside dual(mu).
SweepResult sweep_min_degree(RingPool& pool, int max_n, unsigned jobs);
SweepResult sweep_degree_interval(RingPool& pool, int max_n, unsigned jobs);
SweepResult sweep_torus_slide(RingPool& pool, int max_n, unsigned jobs);
SweepResult sweep_belkale(RingPool& pool, int max_n, unsigned jobs);

// Fusion oracle.
/// verify_quantum_vs_fusion for every shape, plus nonvanishing of every
/// fusion product and the single-term top * top product.
SweepResult sweep_fusion(RingPool& pool, int max_n, unsigned jobs);

/// Every sweep above at the given size, as run by `selftest`.
std::vector<SweepResult> run_all_sweeps(RingPool& pool, int max_n, unsigned jobs);

}  // namespace qschubert
