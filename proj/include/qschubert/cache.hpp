#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschubert/quantum_ring.hpp"

namespace qschubert {

/// On-disk memo of quantum products, one line per term:
///
///     k,n|lambda|mu|nu|c
///
/// with lambda <= mu lexicographically, partitions comma-separated and the
/// empty partition written as 0. The degree is implied by the weights. The
/// file lives in the directory named by QSCHUBERT_CACHE_DIR; without that
/// variable no cache is used. Entries only ever speed things up: a file that
/// fails to parse is ignored as a whole.
class ProductCacheFile {
public:
    static constexpr const char* kFileName = "qschubert-products.v1.txt";
    static constexpr const char* kHeader = "# qschubert product cache v1";

    /// Loads the file under `directory` if it exists.
    explicit ProductCacheFile(std::filesystem::path directory);

    static std::optional<std::filesystem::path> directory_from_environment();

    const std::filesystem::path& path() const { return path_; }
    /// Set when an existing file was discarded because it did not parse.
    const std::optional<std::string>& load_warning() const { return load_warning_; }

    std::optional<QuantumClass> lookup(const BoxedPartition& lambda, const BoxedPartition& mu) const;
    void store(const BoxedPartition& lambda, const BoxedPartition& mu, const QuantumClass& product);

    std::size_t size() const { return entries_.size(); }

    struct Entry {
        BoxedPartition lambda;
        BoxedPartition mu;
        QuantumClass product;
    };
    std::vector<Entry> entries() const;

    /// Writes the whole table to a temporary file in the same directory and
    /// renames it over the cache file. No-op when nothing changed.
    void flush();

private:
    using Key = std::pair<BoxShape, std::pair<Partition, Partition>>;
    static Key key_for(const BoxedPartition& lambda, const BoxedPartition& mu);

    std::filesystem::path directory_;
    std::filesystem::path path_;
    std::map<Key, QuantumClass> entries_;
    std::optional<std::string> load_warning_;
    bool dirty_ = false;
};

}  // namespace qschubert
