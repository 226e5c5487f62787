#include "cuem/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuem {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column(int j) const {
    if (j < 1) return 0;
    int c = 0;
    for (int p : parts_) {
        if (p < j) break;
        ++c;
    }
    return c;
}

bool Partition::contains(int i, int j) const { return j >= 1 && j <= row(i); }

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int j = 1; j <= row(1); ++j) t.push_back(column(j));
    return Partition(std::move(t));
}

int Partition::hook_length(int i, int j) const {
    if (!contains(i, j))
        throw std::out_of_range("hook_length: box (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not in " + to_string());
    return row(i) + column(j) - i - j + 1;
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= row(i); ++j) out.emplace_back(i, j);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void enumerate_rec(int remaining, int cap, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (slots == 0) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_part, std::optional<int> max_len) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, max_part.value_or(n), max_len.value_or(n), cur, out);
    return out;
}

}  // namespace cuem
