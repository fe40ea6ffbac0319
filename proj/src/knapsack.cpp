#include "netform/knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace netform {

KnapsackTable::KnapsackTable(std::vector<int> item_sizes, int capacity)
    : sizes_(std::move(item_sizes)), capacity_(std::max(capacity, 0)) {
    for (int s : sizes_) {
        if (s <= 0) throw std::invalid_argument("knapsack item sizes must be positive");
    }
    const int m = items();
    const std::size_t cells = static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1) *
                              static_cast<std::size_t>(capacity_ + 1);
    values_.assign(cells, 0);
    take_.assign(cells, 0);
    for (int x = 1; x <= m; ++x) {
        const int size = sizes_[static_cast<std::size_t>(x - 1)];
        for (int y = 1; y <= m; ++y) {
            for (int z = 1; z <= capacity_; ++z) {
                const int skip = values_[offset(x - 1, y, z)];
                if (size > z) {
                    values_[offset(x, y, z)] = skip;
                    continue;
                }
                const int with = size + values_[offset(x - 1, y - 1, z - size)];
                if (with > skip) {
                    values_[offset(x, y, z)] = with;
                    take_[offset(x, y, z)] = 1;
                } else {
                    values_[offset(x, y, z)] = skip;
                }
            }
        }
    }
}

std::vector<int> KnapsackTable::reconstruct(int y, int z) const {
    std::vector<int> chosen;
    if (z < 0) return chosen;
    y = std::clamp(y, 0, items());
    z = std::min(z, capacity_);
    for (int x = items(); x >= 1 && y > 0 && z > 0; --x) {
        if (took(x, y, z)) {
            chosen.push_back(x - 1);
            z -= sizes_[static_cast<std::size_t>(x - 1)];
            --y;
        }
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace netform
