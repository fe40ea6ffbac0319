#pragma once

#include <vector>

namespace netform {

/// Table M[x][y][z]: the largest total size <= z reachable with items
/// 1..x using at most y of them. Items are component sizes and each costs
/// one edge, so y never needs to exceed the item count.
class KnapsackTable {
public:
    KnapsackTable(std::vector<int> item_sizes, int capacity);

    int items() const { return static_cast<int>(sizes_.size()); }
    int capacity() const { return capacity_; }
    const std::vector<int>& item_sizes() const { return sizes_; }

    int value(int x, int y, int z) const { return values_[offset(x, y, z)]; }
    /// True when M[x][y][z] was attained by taking item x.
    bool took(int x, int y, int z) const { return take_[offset(x, y, z)] != 0; }

    /// Follows predecessor markers back from M[items][y][z]. Returns 0-based
    /// item indices in increasing order.
    std::vector<int> reconstruct(int y, int z) const;

private:
    std::size_t offset(int x, int y, int z) const {
        return (static_cast<std::size_t>(x) * static_cast<std::size_t>(items() + 1) + static_cast<std::size_t>(y)) *
                   static_cast<std::size_t>(capacity_ + 1) +
               static_cast<std::size_t>(z);
    }

    std::vector<int> sizes_;
    int capacity_;
    std::vector<int> values_;
    std::vector<unsigned char> take_;
};

}  // namespace netform
