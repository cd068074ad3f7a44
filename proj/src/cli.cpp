#include "qschubert/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "qschubert/cache.hpp"
#include "qschubert/degree_analysis.hpp"
#include "qschubert/error.hpp"
#include "qschubert/fusion.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/render.hpp"
#include "qschubert/sweeps.hpp"

namespace qschubert {

namespace {

struct Options {
    std::string shape;
    std::string lambda;
    std::string mu;
    std::string nu;
    std::string square;
    std::string format = "plain";
    int degree = -1;
    int max_n = 6;
    unsigned jobs = 1;
    bool timing = false;
};

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Picks the maximal square whose SE corner comes first along lambda's path.
std::optional<SquarePlacement> default_square(const BoxedPartition& lambda, const BoxedPartition& mu) {
    auto squares = maximal_squares(lambda, mu);
    if (squares.empty()) return std::nullopt;
    auto points = path_points(lambda);
    auto position = [&](const SquarePlacement& s) {
        LatticePoint corner{s.row + s.size - 1, s.col + s.size - 1};
        return std::find(points.begin(), points.end(), corner) - points.begin();
    };
    return *std::min_element(squares.begin(), squares.end(),
                             [&](const auto& a, const auto& b) { return position(a) < position(b); });
}

class Command {
public:
    Command(const Options& opts, std::ostream& out, std::ostream& err) : opts_(opts), out_(out), err_(err) {}

    int dispatch(const std::string& name) {
        format_ = parse_format(opts_.format);
        if (name == "qprod") return qprod();
        if (name == "cprod") return cprod();
        if (name == "lr") return lr();
        if (name == "dmin") return integer_command(name);
        if (name == "dmax") return integer_command(name);
        if (name == "squares") return squares();
        if (name == "belkale") return belkale();
        if (name == "fusion") return fusion();
        if (name == "table") return table();
        if (name == "selftest") return selftest();
        throw InvalidInput("unknown subcommand " + name);
    }

private:
    BoxShape shape() const { return BoxShape::parse(opts_.shape); }
    BoxedPartition boxed(const std::string& text) const { return BoxedPartition(shape(), Partition::parse(text)); }
    Inputs pair_inputs() const {
        return {{"lambda", Partition::parse(opts_.lambda)}, {"mu", Partition::parse(opts_.mu)}};
    }
    std::optional<double> elapsed() const {
        return opts_.timing ? std::optional<double>(watch_.elapsed_ms()) : std::nullopt;
    }
    void emit(const std::string& text) { out_ << text << '\n'; }

    std::optional<ProductCacheFile> open_cache() {
        auto dir = ProductCacheFile::directory_from_environment();
        if (!dir) return std::nullopt;
        ProductCacheFile cache(*dir);
        if (cache.load_warning()) err_ << "warning: " << *cache.load_warning() << '\n';
        return cache;
    }

    void close_cache(std::optional<ProductCacheFile>& cache) {
        if (!cache) return;
        try {
            cache->flush();
        } catch (const std::exception& e) {
            err_ << "warning: cache not written: " << e.what() << '\n';
        }
    }

    QuantumClass product(const QuantumRing& ring, const BoxedPartition& lambda, const BoxedPartition& mu,
                         std::optional<ProductCacheFile>& cache) {
        if (cache) {
            if (auto hit = cache->lookup(lambda, mu)) return *hit;
        }
        QuantumClass value = ring.product(lambda, mu);
        if (cache) cache->store(lambda, mu, value);
        return value;
    }

    int qprod() {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        QuantumRing ring(shape());
        auto cache = open_cache();
        auto value = product(ring, lambda, mu, cache);
        close_cache(cache);
        emit(render_class(value, format_, pair_inputs(), elapsed()));
        return kExitOk;
    }

    int cprod() {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        emit(render_class(as_class(shape(), classical_product(lambda, mu)), format_, pair_inputs(), elapsed()));
        return kExitOk;
    }

    int lr() {
        Inputs inputs{{"lambda", Partition::parse(opts_.lambda)},
                      {"mu", Partition::parse(opts_.mu)},
                      {"nu", Partition::parse(opts_.nu)}};
        if (opts_.degree >= 0 && opts_.shape.empty()) throw InvalidInput("--degree requires --shape");
        if (opts_.shape.empty()) {
            auto value = lr_coefficient(inputs[0].second, inputs[1].second, inputs[2].second);
            emit(render_integer(value, format_, std::nullopt, inputs, elapsed()));
            return kExitOk;
        }
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        auto nu = boxed(opts_.nu);
        const int degree = opts_.degree >= 0 ? opts_.degree : 0;
        auto value = quantum_lr(lambda, mu, nu, degree);
        emit(render_integer(value, format_, shape(), inputs, elapsed()));
        return kExitOk;
    }

    int integer_command(const std::string& name) {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        int value = 0;
        if (name == "dmin") {
            value = dmin(lambda, mu);
        } else {
            QuantumRing ring(shape());
            value = dmax_slide(ring, lambda, mu);
        }
        emit(render_integer(value, format_, shape(), pair_inputs(), elapsed()));
        return kExitOk;
    }

    int squares() {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        emit(render_squares(shape(), maximal_squares(lambda, mu), format_, pair_inputs()));
        return kExitOk;
    }

    int belkale() {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        std::optional<SquarePlacement> square;
        if (!opts_.square.empty()) {
            auto comma = opts_.square.find(',');
            if (comma == std::string::npos) throw InvalidInput("--square expects 'row,col'");
            try {
                square = SquarePlacement{dmin(lambda, mu), std::stoi(opts_.square.substr(0, comma)),
                                         std::stoi(opts_.square.substr(comma + 1))};
            } catch (const std::logic_error&) {
                throw InvalidInput("--square expects 'row,col'");
            }
        } else {
            square = default_square(lambda, mu);
        }
        auto reduction = belkale_reduce(lambda, mu, square);
        emit(render_belkale(shape(), reduction, square, format_, pair_inputs()));
        return kExitOk;
    }

    int fusion() {
        auto lambda = boxed(opts_.lambda);
        auto mu = boxed(opts_.mu);
        auto table = character_table(shape());
        emit(render_class(as_class(shape(), fusion_product(table, lambda, mu)), format_, pair_inputs(), elapsed()));
        return kExitOk;
    }

    int table() {
        const auto s = shape();
        QuantumRing ring(s);
        const auto parts = boxed_partitions(s);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i; j < parts.size(); ++j) pairs.emplace_back(i, j);
        }
        auto cache = open_cache();
        std::vector<std::optional<QuantumClass>> results(pairs.size());
        if (cache) {
            for (std::size_t i = 0; i < pairs.size(); ++i) results[i] = cache->lookup(parts[pairs[i].first], parts[pairs[i].second]);
        }
        parallel_for(pairs.size(), opts_.jobs, [&](std::size_t i) {
            if (!results[i]) results[i] = ring.product(parts[pairs[i].first], parts[pairs[i].second]);
        });
        std::vector<TableRow> rows;
        rows.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& lambda = parts[pairs[i].first];
            const auto& mu = parts[pairs[i].second];
            if (cache) cache->store(lambda, mu, *results[i]);
            rows.push_back({lambda, mu, *results[i]});
        }
        close_cache(cache);
        emit(render_table(s, rows, format_));
        return kExitOk;
    }

    int selftest() {
        if (opts_.max_n < 2) throw InvalidInput("--max-n must be at least 2");
        RingPool pool;
        auto results = run_all_sweeps(pool, opts_.max_n, opts_.jobs);
        if (auto cache = open_cache()) {
            SweepResult cached{"cache entries recomputed"};
            for (const auto& entry : cache->entries()) {
                ++cached.checked;
                if (quantum_product(entry.lambda, entry.mu) != entry.product) {
                    cached.fail("stale cache entry (" + entry.lambda.partition().to_string() + ") * (" +
                                entry.mu.partition().to_string() + ") in Gr(" + entry.lambda.shape().to_string() + ")");
                }
            }
            if (cached.checked > 0) results.push_back(std::move(cached));
        }
        emit(render_selftest(results, opts_.max_n, format_));
        bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
        return ok ? kExitOk : kExitConsistency;
    }

    const Options& opts_;
    std::ostream& out_;
    std::ostream& err_;
    Format format_ = Format::Plain;
    Stopwatch watch_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Classical and quantum Littlewood-Richardson coefficients for Grassmannians Gr(k,n)", "qschubert"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_shape) {
        auto* shape = cmd->add_option("--shape", opts.shape, "Grassmannian parameters k,n");
        if (needs_shape) shape->required();
        cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
        cmd->add_flag("--timing", opts.timing, "Include elapsed time in JSON metadata");
    };
    auto add_pair = [&](CLI::App* cmd) {
        add_common(cmd, true);
        cmd->add_option("--lambda", opts.lambda, "First partition, e.g. 5,4,4,3 (0 for empty)")->required();
        cmd->add_option("--mu", opts.mu, "Second partition")->required();
    };

    add_pair(app.add_subcommand("qprod", "Quantum product sigma_lambda * sigma_mu"));
    add_pair(app.add_subcommand("cprod", "Classical product in H*(Gr(k,n))"));
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient (quantum with --shape and --degree)");
    add_common(lr, false);
    lr->add_option("--lambda", opts.lambda)->required();
    lr->add_option("--mu", opts.mu)->required();
    lr->add_option("--nu", opts.nu)->required();
    lr->add_option("--degree,-d", opts.degree, "Power of q")->check(CLI::NonNegativeNumber);
    add_pair(app.add_subcommand("dmin", "Smallest power of q in the product"));
    add_pair(app.add_subcommand("dmax", "Largest power of q, by the torus slide"));
    add_pair(app.add_subcommand("squares", "Maximal squares inside lambda and outside dual(mu)"));
    auto* belkale = app.add_subcommand("belkale", "Reduction of the minimal q-term to a classical product");
    add_pair(belkale);
    belkale->add_option("--square", opts.square, "Top-left cell row,col of the maximal square to use");
    add_pair(app.add_subcommand("fusion", "Fusion-ring structure constants (product at q = 1)"));
    auto* table = app.add_subcommand("table", "Every product sigma_lambda * sigma_mu for a shape");
    add_common(table, true);
    table->add_option("--jobs,-j", opts.jobs, "Worker threads (0 = all cores)");
    auto* selftest = app.add_subcommand("selftest", "Run every invariant sweep up to a given n");
    add_common(selftest, false);
    selftest->add_option("--max-n", opts.max_n, "Largest n to sweep")->check(CLI::Range(2, 12));
    selftest->add_option("--jobs,-j", opts.jobs, "Worker threads (0 = all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        CLI::App* context = &app;
        for (auto* sub : app.get_subcommands()) context = sub;
        err << context->help();
        return kExitInvalidInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return Command(opts, out, err).dispatch(name);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return kExitConsistency;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConsistency;
    }
}

}  // namespace qschubert
