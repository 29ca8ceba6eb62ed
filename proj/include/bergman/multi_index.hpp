#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

// Multi-index alpha in Z^n labelling the Laurent monomial z^alpha.
// Ordered lexicographically so that tables keyed by MultiIndex are
// deterministic.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

    static MultiIndex zero(std::size_t dim) { return MultiIndex(std::vector<int>(dim, 0)); }

    std::size_t dim() const { return entries_.size(); }
    int operator[](std::size_t k) const { return entries_[k]; }
    int& operator[](std::size_t k) { return entries_[k]; }
    const std::vector<int>& entries() const { return entries_; }

    MultiIndex negated() const {
        std::vector<int> e(entries_);
        for (int& v : e) v = -v;
        return MultiIndex(std::move(e));
    }

    int max_abs() const {
        int m = 0;
        for (int v : entries_) m = std::max(m, v < 0 ? -v : v);
        return m;
    }

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
    bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }
    bool operator<(const MultiIndex& o) const { return entries_ < o.entries_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(entries_[k]);
        }
        return s + ")";
    }

private:
    std::vector<int> entries_;
};

// All alpha with ||alpha||_inf <= cap, in lexicographic order.
inline std::vector<MultiIndex> index_window(std::size_t dim, int cap) {
    if (cap < 0) throw std::invalid_argument("index_window: cap must be >= 0");
    std::vector<MultiIndex> out;
    if (dim == 0) return out;
    std::vector<int> cur(dim, -cap);
    while (true) {
        out.push_back(MultiIndex(cur));
        std::size_t k = dim;
        while (k > 0 && cur[k - 1] == cap) {
            cur[k - 1] = -cap;
            --k;
        }
        if (k == 0) break;
        ++cur[k - 1];
    }
    return out;
}

}  // namespace bergman
