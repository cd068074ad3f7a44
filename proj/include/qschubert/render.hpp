#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qschubert/degree_analysis.hpp"
#include "qschubert/fusion.hpp"
#include "qschubert/littlewood_richardson.hpp"
#include "qschubert/quantum_ring.hpp"
#include "qschubert/sweeps.hpp"

namespace qschubert {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Format { Plain, Json, Latex };

Format parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

/// Named partition arguments echoed back in JSON output.
using Inputs = std::vector<std::pair<std::string, Partition>>;

/// Common JSON envelope: shape, inputs, then the payload keys, then meta.
struct Document {
    std::optional<BoxShape> shape;
    Inputs inputs;
    Json payload = Json::object();
    std::optional<double> elapsed_ms;

    /// Compact single-line JSON.
    std::string to_json() const;
};

Json partition_json(const Partition& p);
Json terms_json(const QuantumClass& value);

/// "q^2*s[5,3,2,2] + 2*q^3*s[2,1]"; "0" for the zero class.
std::string plain_terms(const QuantumClass& value);
/// "q^{2}\sigma_{(5,3,2,2)} + 2\,q^{3}\sigma_{(2,1,0,0)}"; partitions padded to k parts.
std::string latex_terms(const QuantumClass& value);

QuantumClass as_class(const BoxShape& shape, const SchurCombination& combination);
QuantumClass as_class(const BoxShape& shape, const FusionProduct& fusion);

std::string render_class(const QuantumClass& value, Format format, const Inputs& inputs,
                         std::optional<double> elapsed_ms);
std::string render_integer(const Coefficient& value, Format format, const std::optional<BoxShape>& shape,
                           const Inputs& inputs, std::optional<double> elapsed_ms);
std::string render_squares(const BoxShape& shape, const std::vector<SquarePlacement>& squares, Format format,
                           const Inputs& inputs);
std::string render_belkale(const BoxShape& shape, const BelkaleReduction& reduction,
                           const std::optional<SquarePlacement>& square, Format format, const Inputs& inputs);

struct TableRow {
    BoxedPartition lambda;
    BoxedPartition mu;
    QuantumClass product;
};
std::string render_table(const BoxShape& shape, const std::vector<TableRow>& rows, Format format);

std::string render_selftest(const std::vector<SweepResult>& results, int max_n, Format format);

}  // namespace qschubert
