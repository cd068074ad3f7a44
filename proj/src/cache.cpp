#include "qschubert/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

std::string field_text(const Partition& p) { return p.empty() ? "0" : p.to_string(); }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

ProductCacheFile::Key ProductCacheFile::key_for(const BoxedPartition& lambda, const BoxedPartition& mu) {
    if (lambda.shape() != mu.shape()) throw InvalidInput("partitions belong to different shapes");
    const auto& a = lambda.partition();
    const auto& b = mu.partition();
    return {lambda.shape(), a <= b ? std::pair{a, b} : std::pair{b, a}};
}

ProductCacheFile::ProductCacheFile(std::filesystem::path directory)
    : directory_(std::move(directory)), path_(directory_ / kFileName) {
    std::ifstream in(path_);
    if (!in) return;
    std::map<Key, QuantumClass> loaded;
    std::string line;
    std::size_t line_number = 0;
    try {
        while (std::getline(in, line)) {
            ++line_number;
            if (line.empty() || line.front() == '#') continue;
            auto fields = split(line, '|');
            if (fields.size() != 5) throw InvalidInput("expected 5 fields");
            auto shape = BoxShape::parse(fields[0]);
            BoxedPartition lambda(shape, Partition::parse(fields[1]));
            BoxedPartition mu(shape, Partition::parse(fields[2]));
            BoxedPartition nu(shape, Partition::parse(fields[3]));
            Coefficient c(fields[4]);
            const int excess = lambda.weight() + mu.weight() - nu.weight();
            if (excess < 0 || excess % shape.n() != 0 || c <= 0) throw InvalidInput("inconsistent record");
            auto key = key_for(lambda, mu);
            auto it = loaded.try_emplace(key, shape).first;
            it->second.add(excess / shape.n(), nu.partition(), c);
        }
    } catch (const std::exception& e) {
        load_warning_ = "ignoring cache " + path_.string() + ": line " + std::to_string(line_number) + ": " + e.what();
        return;
    }
    entries_ = std::move(loaded);
}

std::optional<std::filesystem::path> ProductCacheFile::directory_from_environment() {
    const char* dir = std::getenv("QSCHUBERT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

std::optional<QuantumClass> ProductCacheFile::lookup(const BoxedPartition& lambda, const BoxedPartition& mu) const {
    auto it = entries_.find(key_for(lambda, mu));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ProductCacheFile::store(const BoxedPartition& lambda, const BoxedPartition& mu, const QuantumClass& product) {
    auto [it, inserted] = entries_.try_emplace(key_for(lambda, mu), product);
    if (inserted) {
        dirty_ = true;
    } else if (it->second != product) {
        throw ConsistencyError("cache already holds a different product for (" + lambda.partition().to_string() +
                               ") * (" + mu.partition().to_string() + ")");
    }
}

std::vector<ProductCacheFile::Entry> ProductCacheFile::entries() const {
    std::vector<Entry> out;
    for (const auto& [key, product] : entries_) {
        out.push_back({BoxedPartition(key.first, key.second.first), BoxedPartition(key.first, key.second.second), product});
    }
    return out;
}

void ProductCacheFile::flush() {
    if (!dirty_) return;
    std::filesystem::create_directories(directory_);
    // Keep records another process wrote since this one loaded.
    ProductCacheFile on_disk(directory_);
    if (!on_disk.load_warning_) entries_.merge(on_disk.entries_);
    auto temp = directory_ / (std::string(kFileName) + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(temp, std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + temp.string());
        out << kHeader << '\n';
        for (const auto& [key, product] : entries_) {
            const auto prefix = key.first.to_string() + "|" + field_text(key.second.first) + "|" +
                                field_text(key.second.second) + "|";
            for (const auto& [term, c] : product.terms()) out << prefix << field_text(term.nu) << '|' << c << '\n';
        }
        out.flush();
        if (!out) throw Error("failed writing cache file " + temp.string());
    }
    std::filesystem::rename(temp, path_);
    dirty_ = false;
}

}  // namespace qschubert
