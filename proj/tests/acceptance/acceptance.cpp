// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qschubert/cli.hpp"
#include "qschubert/degree_analysis.hpp"
#include "qschubert/error.hpp"
#include "qschubert/fusion.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/sweeps.hpp"

using namespace qschubert;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
    void absorb(const SweepResult& r) {
        std::ostringstream line;
        line << r.name << ": " << r.checked << " checked, " << r.failure_count << " failed";
        notes.push_back(line.str());
        if (!r.passed()) {
            ok = false;
            for (const auto& f : r.failures) notes.push_back("  " + f);
        }
    }
};

BoxedPartition gr49(std::initializer_list<int> parts) { return {BoxShape(4, 9), Partition(parts)}; }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs one criterion, prints its line and returns whether it passed.
bool criterion(int number, const std::string& title, double budget_seconds, const std::function<void(Verdict&)>& body) {
    Verdict verdict;
    auto start = Clock::now();
    try {
        body(verdict);
    } catch (const std::exception& e) {
        verdict.ok = false;
        verdict.notes.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    if (budget_seconds > 0 && elapsed > budget_seconds) {
        verdict.ok = false;
        verdict.notes.push_back("time budget exceeded");
    }
    std::printf("%s %2d %s (%.2fs)\n", verdict.ok ? "PASS" : "FAIL", number, title.c_str(), elapsed);
    for (const auto& note : verdict.notes) std::printf("       %s\n", note.c_str());
    std::fflush(stdout);
    return verdict.ok;
}

}  // namespace

int main() {
    const unsigned jobs = default_jobs();
    RingPool pool;
    const auto lambda = gr49({5, 4, 4, 3});
    const auto mu = gr49({5, 4, 4, 1});
    std::printf("acceptance: %u worker threads\n", jobs);

    int failed = 0;
    auto tally = [&](bool ok) { failed += ok ? 0 : 1; };

    tally(criterion(1, "worked product: six terms, each coefficient 1", 5, [&](Verdict& v) {
        std::ostringstream out, err;
        int code = run({"qprod", "--shape", "4,9", "--lambda", "5,4,4,3", "--mu", "5,4,4,1", "--format", "json"}, out,
                       err);
        v.expect(code == kExitOk, "qprod exit code " + std::to_string(code));
        auto product = quantum_product(lambda, mu);
        QuantumClass expected(BoxShape(4, 9));
        for (auto p : {Partition{5, 3, 2, 2}, Partition{5, 3, 3, 1}, Partition{5, 4, 2, 1}}) expected.add(2, p, 1);
        for (auto p : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}) expected.add(3, p, 1);
        v.notes.push_back("computed: " + product.to_string());
        v.expect(product == expected, "expected: " + expected.to_string());
    }));

    tally(criterion(2, "worked degree analysis", 5, [&](Verdict& v) {
        const auto& ring = pool.ring(BoxShape(4, 9));
        v.expect(dual(mu).partition() == Partition{4, 1, 1, 0}, "dual(mu)");
        v.expect(dmin(lambda, mu) == 2, "dmin");
        v.expect(maximal_squares(lambda, mu).size() == 3, "three maximal squares");
        auto r = belkale_reduce(lambda, mu, SquarePlacement{2, 2, 3});
        v.expect(r.a == 4 && r.b == 5, "a=4, b=5");
        v.expect(r.lambda_prime.partition() == Partition{4, 1}, "lambda'=(4,1)");
        v.expect(r.mu_prime.partition() == Partition{3, 2, 1, 1}, "mu'=(3,2,1,1)");
        SchurCombination expected;
        for (auto p : {Partition{5, 3, 2, 2}, Partition{5, 3, 3, 1}, Partition{5, 4, 2, 1}}) expected.add(p, 1);
        v.expect(minimal_term(ring, lambda, mu) == expected, "minimal term");
        v.expect(degree_support(ring, lambda, mu) == std::set<int>{2, 3}, "support {2,3}");
        v.expect(dmax_slide(ring, lambda, mu) == 3, "dmax_slide = 3");
    }));

    tally(criterion(3, "min degree equals dmin, n <= 8", 600, [&](Verdict& v) {
        v.absorb(sweep_min_degree(pool, 8, jobs));
    }));

    tally(criterion(4, "degree support is an interval (n <= 8), slide gives its maximum (n <= 7)", 0, [&](Verdict& v) {
        v.absorb(sweep_degree_interval(pool, 8, jobs));
        v.absorb(sweep_torus_slide(pool, 7, jobs));
    }));

    tally(criterion(5, "minimal term from any maximal square equals the q^dmin layer, n <= 7", 0, [&](Verdict& v) {
        v.absorb(sweep_belkale(pool, 7, jobs));
    }));

    tally(criterion(6, "nonvanishing and positivity, n <= 8", 0, [&](Verdict& v) {
        v.absorb(sweep_positivity(pool, 8, jobs));
    }));

    tally(criterion(7, "fusion oracle agrees with rim-hook products, n <= 8 and the Gr(4,9) pair", 600, [&](Verdict& v) {
        v.absorb(sweep_fusion(pool, 8, jobs));
        auto table = character_table(BoxShape(4, 9));
        auto fused = fusion_product(table, lambda, mu);
        auto mismatch = compare_with_quantum(pool.ring(BoxShape(4, 9)), fused, lambda, mu);
        v.expect(mismatch.empty(), "Gr(4,9) pair: " + mismatch);
        v.expect(fused.residual < kFusionTolerance && fused.rounding_error < kFusionTolerance, "Gr(4,9) tolerance");
    }));

    tally(criterion(8, "associativity, commutativity and grading", 0, [&](Verdict& v) {
        v.absorb(sweep_associativity(pool, 6, 8, 1000, 20240601, jobs));
        v.absorb(sweep_commutativity_grading(pool, 8, jobs));
    }));

    tally(criterion(9, "Giambelli (n <= 8), presentation (n <= 9), rim-hook orders (n <= 7)", 0, [&](Verdict& v) {
        v.absorb(sweep_giambelli(pool, 8, jobs));
        v.absorb(sweep_presentation(pool, 9));
        v.absorb(sweep_rim_orders(7, jobs));
    }));

    tally(criterion(10, "classical layer: tableaux vs monomials, pairing, nonvanishing", 0, [&](Verdict& v) {
        v.absorb(sweep_lr_vs_monomials(4, 8, jobs));
        v.absorb(sweep_classical_pairing(pool, 8));
    }));

    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
