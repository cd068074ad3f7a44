#include "qschubert/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::vector<int> values;
    text = trim(text);
    if (text.empty()) return values;
    while (true) {
        auto comma = text.find(',');
        auto field = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw InvalidInput("malformed " + std::string(what) + " '" + std::string(text) + "'");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidInput("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    return Partition(parse_int_list(text, "partition"));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.parts_[i] > parts_[i]) return false;
    }
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int c = 0; c < part; ++c) ++conj[c];
    }
    return Partition(std::move(conj));
}

std::vector<int> Partition::padded(int size) const {
    std::vector<int> out(parts_);
    if (static_cast<int>(out.size()) < size) out.resize(static_cast<std::size_t>(size), 0);
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

BoxShape::BoxShape(int k, int n) : k_(k), n_(n) {
    if (k <= 0 || n <= k) {
        throw InvalidInput("shape requires 0 < k < n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
    }
}

BoxShape BoxShape::parse(std::string_view text) {
    auto values = parse_int_list(text, "shape");
    if (values.size() != 2) throw InvalidInput("shape must be 'k,n'");
    return BoxShape(values[0], values[1]);
}

std::string BoxShape::to_string() const {
    return std::to_string(k_) + "," + std::to_string(n_);
}

BoxedPartition::BoxedPartition(BoxShape shape, Partition partition)
    : shape_(shape), partition_(std::move(partition)) {
    if (!shape_.fits(partition_)) {
        throw InvalidInput("partition (" + partition_.to_string() + ") does not fit the " +
                           std::to_string(shape_.k()) + " x " + std::to_string(shape_.width()) + " box");
    }
}

std::vector<BoxedPartition> boxed_partitions(const BoxShape& shape) {
    std::vector<BoxedPartition> out;
    std::vector<int> parts(static_cast<std::size_t>(shape.k()), 0);
    auto rec = [&](auto&& self, int row, int bound) -> void {
        if (row == shape.k()) {
            out.emplace_back(shape, Partition(parts));
            return;
        }
        for (int v = bound; v >= 0; --v) {
            parts[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, v);
        }
    };
    rec(rec, 0, shape.width());
    return out;
}

std::vector<Partition> partitions_of(int weight, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_rows) return;
        for (int v = std::min(remaining, bound); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    rec(rec, weight, weight);
    return out;
}

LatticePath partition_to_path(const BoxedPartition& lambda) {
    const auto& shape = lambda.shape();
    const auto& p = lambda.partition();
    LatticePath path;
    path.steps.reserve(static_cast<std::size_t>(shape.n()));
    int col = shape.width();
    for (int row = 0; row < shape.k(); ++row) {
        for (; col > p[static_cast<std::size_t>(row)]; --col) path.steps.push_back(Step::Left);
        path.steps.push_back(Step::Down);
    }
    for (; col > 0; --col) path.steps.push_back(Step::Left);
    return path;
}

BoxedPartition path_to_partition(const BoxShape& shape, const LatticePath& path) {
    auto downs = std::count(path.steps.begin(), path.steps.end(), Step::Down);
    if (static_cast<int>(path.steps.size()) != shape.n() || downs != shape.k()) {
        throw InvalidInput("path must have " + std::to_string(shape.k()) + " Down and " +
                           std::to_string(shape.width()) + " Left steps");
    }
    std::vector<int> parts;
    int col = shape.width();
    for (Step s : path.steps) {
        if (s == Step::Left) {
            --col;
        } else {
            parts.push_back(col);
        }
    }
    return BoxedPartition(shape, Partition(std::move(parts)));
}

std::vector<LatticePoint> path_points(const BoxedPartition& lambda) {
    auto path = partition_to_path(lambda);
    std::vector<LatticePoint> points;
    points.reserve(path.steps.size() + 1);
    LatticePoint at{0, lambda.shape().width()};
    points.push_back(at);
    for (Step s : path.steps) {
        if (s == Step::Down) {
            ++at.row;
        } else {
            --at.col;
        }
        points.push_back(at);
    }
    return points;
}

std::vector<int> schubert_rank_vector(const BoxedPartition& lambda) {
    std::vector<int> ranks;
    int downs = 0;
    for (Step s : partition_to_path(lambda).steps) {
        if (s == Step::Down) ++downs;
        ranks.push_back(downs);
    }
    return ranks;
}

BoxedPartition dual(const BoxedPartition& lambda) {
    const auto& shape = lambda.shape();
    auto parts = lambda.partition().padded(shape.k());
    std::vector<int> out(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out[i] = shape.width() - parts[parts.size() - 1 - i];
    }
    return BoxedPartition(shape, Partition(std::move(out)));
}

Partition add_left_rectangle(const Partition& lambda, int a, int k) {
    if (lambda.length() > k) {
        throw InvalidInput("partition (" + lambda.to_string() + ") has more than " + std::to_string(k) + " parts");
    }
    if (a < 0) throw InvalidInput("rectangle width must be nonnegative");
    auto parts = lambda.padded(k);
    for (int& part : parts) part += a;
    return Partition(std::move(parts));
}

std::vector<int> beta_numbers(const Partition& lambda, int k) {
    if (lambda.length() > k) {
        throw InvalidInput("partition (" + lambda.to_string() + ") has more than " + std::to_string(k) + " parts");
    }
    auto parts = lambda.padded(k);
    for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] += k - 1 - i;
    return parts;
}

std::string to_string(const LatticePath& path) {
    std::string out;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (i) out += ',';
        out += path.steps[i] == Step::Down ? 'D' : 'L';
    }
    return out;
}

}  // namespace qschubert
