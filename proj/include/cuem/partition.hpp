#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cuem {

/// Integer partition / Young diagram. Rows and columns are 1-indexed.
class Partition {
public:
    Partition() = default;
    /// Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// lambda_i; zero for i beyond the length.
    int row(int i) const;
    /// lambda'_j, the length of column j; zero beyond the first row.
    int column(int j) const;
    bool contains(int i, int j) const;

    Partition transpose() const;
    int hook_length(int i, int j) const;

    /// Boxes (i, j) in row-major order.
    std::vector<std::pair<int, int>> boxes() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n with largest part <= max_part and at most max_len
/// parts, in lexicographically decreasing order. n = 0 gives {empty}.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part = std::nullopt,
                                            std::optional<int> max_len = std::nullopt);

}  // namespace cuem
