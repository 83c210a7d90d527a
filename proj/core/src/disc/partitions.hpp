#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace clm::disc::detail {

inline constexpr int kMaxPartitionElements = 12;

// Set partitions of {0, ..., n-1} into exactly three nonempty blocks, as bit
// masks. Block 0 holds element 0; blocks are ordered by their least element.
const std::vector<std::array<std::uint32_t, 3>>& three_block_partitions(int n);

}  // namespace clm::disc::detail
