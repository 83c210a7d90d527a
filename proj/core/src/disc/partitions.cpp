#include "partitions.hpp"

#include "clm/error.hpp"

namespace clm::disc::detail {
namespace {

void extend(int n, int pos, int used, std::array<std::uint32_t, 3>& blocks,
            std::vector<std::array<std::uint32_t, 3>>& out) {
  // Prune: the remaining elements must be able to open the missing blocks.
  if (used + (n - pos) < 3) return;
  if (pos == n) {
    out.push_back(blocks);
    return;
  }
  const int limit = used < 3 ? used + 1 : 3;
  for (int b = 0; b < limit; ++b) {
    blocks[static_cast<std::size_t>(b)] |= (1u << pos);
    extend(n, pos + 1, b == used ? used + 1 : used, blocks, out);
    blocks[static_cast<std::size_t>(b)] &= ~(1u << pos);
  }
}

std::vector<std::vector<std::array<std::uint32_t, 3>>> build_all() {
  std::vector<std::vector<std::array<std::uint32_t, 3>>> all(kMaxPartitionElements + 1);
  for (int n = 3; n <= kMaxPartitionElements; ++n) {
    std::array<std::uint32_t, 3> blocks{};
    extend(n, 0, 0, blocks, all[static_cast<std::size_t>(n)]);
  }
  return all;
}

}  // namespace

const std::vector<std::array<std::uint32_t, 3>>& three_block_partitions(int n) {
  static const auto all = build_all();
  if (n < 0 || n > kMaxPartitionElements) throw CapExceeded("too many prime factors for partition table");
  return all[static_cast<std::size_t>(n)];
}

}  // namespace clm::disc::detail
