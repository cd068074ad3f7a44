#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qschubert {

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// dropped on construction, so (4,1,0,0) and (4,1) are the same value.
/// Ordering is lexicographic on the parts, which agrees with comparing the
/// zero-padded sequences.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "5,4,4,3". The empty string and "0" both denote the empty
    /// partition; surrounding whitespace is ignored.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return weight_; }

    /// i-th part, 0-based; zero past the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// True when the diagram of `inner` sits inside this one.
    bool contains(const Partition& inner) const;

    Partition conjugate() const;

    /// Parts padded with zeros to exactly `size` entries.
    std::vector<int> padded(int size) const;

    /// "5,4,4,3"; the empty partition renders as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// The k x (n-k) rectangle that houses the Schubert classes of Gr(k,n).
class BoxShape {
public:
    BoxShape(int k, int n);

    /// Parses "k,n".
    static BoxShape parse(std::string_view text);

    int k() const { return k_; }
    int n() const { return n_; }
    int width() const { return n_ - k_; }
    int cells() const { return k_ * (n_ - k_); }

    bool fits(const Partition& p) const { return p.length() <= k_ && p[0] <= width(); }

    std::string to_string() const;

    friend bool operator==(const BoxShape&, const BoxShape&) = default;
    friend auto operator<=>(const BoxShape&, const BoxShape&) = default;

private:
    int k_;
    int n_;
};

/// A partition known to fit its shape; indexes the Schubert class sigma_lambda.
class BoxedPartition {
public:
    BoxedPartition(BoxShape shape, Partition partition);

    const BoxShape& shape() const { return shape_; }
    const Partition& partition() const { return partition_; }
    int weight() const { return partition_.weight(); }

    friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;
    friend auto operator<=>(const BoxedPartition&, const BoxedPartition&) = default;

private:
    BoxShape shape_;
    Partition partition_;
};

/// Every boxed partition of the shape, in descending lexicographic order
/// (full rectangle first, empty partition last). There are C(n,k) of them.
std::vector<BoxedPartition> boxed_partitions(const BoxShape& shape);

/// Every partition of `weight` with at most `max_rows` parts, descending lex.
std::vector<Partition> partitions_of(int weight, int max_rows);

enum class Step : unsigned char { Down, Left };

/// Boundary of a boxed diagram, read from the rectangle's upper-right corner
/// to its lower-left corner.
struct LatticePath {
    std::vector<Step> steps;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Lattice point in matrix coordinates: row 0 is the top edge, column 0 the
/// left edge; 0 <= row <= k and 0 <= col <= n-k inside the rectangle.
struct LatticePoint {
    int row;
    int col;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePath partition_to_path(const BoxedPartition& lambda);
BoxedPartition path_to_partition(const BoxShape& shape, const LatticePath& path);

/// The n+1 lattice points visited by partition_to_path, starting at (0, n-k).
std::vector<LatticePoint> path_points(const BoxedPartition& lambda);

/// r_i = number of Down steps among the first i steps of the path, i = 1..n.
std::vector<int> schubert_rank_vector(const BoxedPartition& lambda);

/// Complement in the rectangle rotated by 180 degrees.
BoxedPartition dual(const BoxedPartition& lambda);

/// Pads lambda to k parts and adds `a` to each.
Partition add_left_rectangle(const Partition& lambda, int a, int k);

/// beta_i = lambda_i + k - i for i = 1..k; strictly decreasing.
std::vector<int> beta_numbers(const Partition& lambda, int k);

/// Cell (row, col), 1-based, lies in the diagram.
inline bool has_cell(const Partition& p, int row, int col) {
    return row >= 1 && col >= 1 && row <= p.length() && col <= p[static_cast<std::size_t>(row - 1)];
}

std::string to_string(const LatticePath& path);

}  // namespace qschubert

template <>
struct std::hash<qschubert::Partition> : qschubert::PartitionHash {};
