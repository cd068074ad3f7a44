#include "qschubert/render.hpp"

#include <sstream>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

Json coefficient_json(const Coefficient& c) {
    // Values past 64 bits are emitted as decimal strings.
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return Json(c.convert_to<std::int64_t>());
    }
    return Json(c.str());
}

std::string latex_partition(const Partition& p, int k) {
    std::string out = "(";
    auto parts = p.padded(k);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Document make_document(const std::optional<BoxShape>& shape, const Inputs& inputs, std::optional<double> elapsed_ms) {
    Document doc;
    doc.shape = shape;
    doc.inputs = inputs;
    doc.elapsed_ms = elapsed_ms;
    return doc;
}

std::string square_text(const SquarePlacement& s) {
    return std::to_string(s.size) + "x" + std::to_string(s.size) + " at (" + std::to_string(s.row) + "," +
           std::to_string(s.col) + ")";
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "plain") return Format::Plain;
    if (text == "json") return Format::Json;
    if (text == "latex") return Format::Latex;
    throw InvalidInput("unknown format '" + std::string(text) + "' (expected plain, json or latex)");
}

std::string Document::to_json() const {
    Json doc = Json::object();
    if (shape) doc["shape"] = Json{{"k", shape->k()}, {"n", shape->n()}};
    if (!inputs.empty()) {
        Json in = Json::object();
        for (const auto& [name, p] : inputs) in[name] = partition_json(p);
        doc["inputs"] = std::move(in);
    }
    for (const auto& [key, value] : payload.items()) doc[key] = value;
    Json meta{{"tool", "qschubert"}, {"version", std::string(kToolVersion)}};
    if (elapsed_ms) meta["elapsedMs"] = *elapsed_ms;
    doc["meta"] = std::move(meta);
    return doc.dump();
}

Json partition_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

Json terms_json(const QuantumClass& value) {
    Json terms = Json::array();
    for (const auto& [key, c] : value.terms()) {
        terms.push_back(Json{{"d", key.degree}, {"nu", partition_json(key.nu)}, {"coeff", coefficient_json(c)}});
    }
    return terms;
}

std::string plain_terms(const QuantumClass& value) { return value.to_string(); }

std::string latex_terms(const QuantumClass& value) {
    if (value.is_zero()) return "0";
    const int k = value.shape().k();
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : value.terms()) {
        if (!first) out << " + ";
        first = false;
        if (c != 1) out << c << "\\,";
        if (key.degree == 1) out << "q";
        if (key.degree > 1) out << "q^{" << key.degree << "}";
        out << "\\sigma_{" << latex_partition(key.nu, k) << "}";
    }
    return out.str();
}

QuantumClass as_class(const BoxShape& shape, const SchurCombination& combination) {
    QuantumClass out(shape);
    for (const auto& [nu, c] : combination.terms()) out.add(0, nu, c);
    return out;
}

QuantumClass as_class(const BoxShape& shape, const FusionProduct& fusion) {
    QuantumClass out(shape);
    for (const auto& [nu, c] : fusion.coefficients) out.add(0, nu, c);
    return out;
}

std::string render_class(const QuantumClass& value, Format format, const Inputs& inputs,
                         std::optional<double> elapsed_ms) {
    switch (format) {
        case Format::Plain:
            return plain_terms(value);
        case Format::Latex:
            return latex_terms(value);
        case Format::Json: {
            auto doc = make_document(value.shape(), inputs, elapsed_ms);
            doc.payload["terms"] = terms_json(value);
            return doc.to_json();
        }
    }
    return {};
}

std::string render_integer(const Coefficient& value, Format format, const std::optional<BoxShape>& shape,
                           const Inputs& inputs, std::optional<double> elapsed_ms) {
    if (format != Format::Json) return value.str();
    auto doc = make_document(shape, inputs, elapsed_ms);
    doc.payload["value"] = coefficient_json(value);
    return doc.to_json();
}

std::string render_squares(const BoxShape& shape, const std::vector<SquarePlacement>& squares, Format format,
                           const Inputs& inputs) {
    if (format == Format::Json) {
        auto doc = make_document(shape, inputs, std::nullopt);
        Json list = Json::array();
        for (const auto& s : squares) list.push_back(Json{{"size", s.size}, {"row", s.row}, {"col", s.col}});
        doc.payload["squares"] = std::move(list);
        return doc.to_json();
    }
    std::string out;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (i) out += '\n';
        out += format == Format::Latex ? "$" + std::to_string(squares[i].size) + "\\times" +
                                             std::to_string(squares[i].size) + "$ at $(" +
                                             std::to_string(squares[i].row) + "," + std::to_string(squares[i].col) + ")$"
                                       : square_text(squares[i]);
    }
    return out;
}

std::string render_belkale(const BoxShape& shape, const BelkaleReduction& reduction,
                           const std::optional<SquarePlacement>& square, Format format, const Inputs& inputs) {
    if (format == Format::Latex) {
        return "a=" + std::to_string(reduction.a) + ",\\ b=" + std::to_string(reduction.b) + ",\\ \\lambda'=" +
               latex_partition(reduction.lambda_prime.partition(), shape.k()) + ",\\ \\mu'=" +
               latex_partition(reduction.mu_prime.partition(), shape.k());
    }
    Json body = Json::object();
    body["a"] = reduction.a;
    body["b"] = reduction.b;
    body["lambdaPrime"] = partition_json(reduction.lambda_prime.partition());
    body["muPrime"] = partition_json(reduction.mu_prime.partition());
    body["square"] = square ? Json{{"size", square->size}, {"row", square->row}, {"col", square->col}} : Json(nullptr);
    if (format == Format::Plain) return body.dump();
    auto doc = make_document(shape, inputs, std::nullopt);
    doc.payload = std::move(body);
    return doc.to_json();
}

std::string render_table(const BoxShape& shape, const std::vector<TableRow>& rows, Format format) {
    if (format == Format::Json) {
        auto doc = make_document(shape, {}, std::nullopt);
        Json products = Json::array();
        for (const auto& row : rows) {
            products.push_back(Json{{"lambda", partition_json(row.lambda.partition())},
                                    {"mu", partition_json(row.mu.partition())},
                                    {"terms", terms_json(row.product)}});
        }
        doc.payload["products"] = std::move(products);
        return doc.to_json();
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i) out << '\n';
        if (format == Format::Latex) {
            out << "\\sigma_{" << latex_partition(row.lambda.partition(), shape.k()) << "} * \\sigma_{"
                << latex_partition(row.mu.partition(), shape.k()) << "} &= " << latex_terms(row.product) << " \\\\";
        } else {
            out << "s[" << row.lambda.partition().to_string() << "] * s[" << row.mu.partition().to_string()
                << "] = " << plain_terms(row.product);
        }
    }
    return out.str();
}

std::string render_selftest(const std::vector<SweepResult>& results, int max_n, Format format) {
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed() ? 0 : 1;
    if (format == Format::Json) {
        auto doc = make_document(std::nullopt, {}, std::nullopt);
        Json sweeps = Json::array();
        for (const auto& r : results) {
            sweeps.push_back(Json{{"name", r.name},
                                  {"checked", r.checked},
                                  {"failures", r.failure_count},
                                  {"examples", r.failures}});
        }
        doc.payload["maxN"] = max_n;
        doc.payload["sweeps"] = std::move(sweeps);
        doc.payload["failed"] = failed;
        return doc.to_json();
    }
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checked, " << r.failure_count
            << " failures)\n";
        for (const auto& f : r.failures) out << "  " << f << '\n';
    }
    out << "selftest max-n " << max_n << ": " << results.size() << " sweeps, " << failed << " failed";
    return out.str();
}

}  // namespace qschubert
