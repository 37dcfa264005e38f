#include "clanforge/partition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "clanforge/error.hpp"

namespace clanforge {

Partition::Partition(std::vector<BlockId> block_of) : block_of_(std::move(block_of)) {
  if (block_of_.empty()) return;
  const BlockId max_block = *std::max_element(block_of_.begin(), block_of_.end());
  std::vector<bool> used(static_cast<std::size_t>(max_block) + 1, false);
  for (BlockId b : block_of_) used[b] = true;
  auto gap = std::find(used.begin(), used.end(), false);
  if (gap != used.end()) {
    fail(ErrorCode::InvalidArgument,
         "partition block " + std::to_string(gap - used.begin()) + " is empty");
  }
  block_count_ = used.size();
}

template <typename Label>
Partition Partition::from_labels(std::span<const Label> labels) {
  std::unordered_map<Label, BlockId> ids;
  std::vector<BlockId> out;
  out.reserve(labels.size());
  for (const Label& l : labels) {
    auto [it, inserted] = ids.emplace(l, static_cast<BlockId>(ids.size()));
    out.push_back(it->second);
  }
  return Partition(std::move(out));
}

template Partition Partition::from_labels<BlockId>(std::span<const BlockId>);
template Partition Partition::from_labels<std::int64_t>(std::span<const std::int64_t>);
template Partition Partition::from_labels<std::uint64_t>(std::span<const std::uint64_t>);

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(block_count_, 0);
  for (BlockId b : block_of_) ++sizes[b];
  return sizes;
}

std::vector<std::vector<NodeIndex>> Partition::members() const {
  std::vector<std::vector<NodeIndex>> out(block_count_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    out[block_of_[i]].push_back(static_cast<NodeIndex>(i));
  }
  return out;
}

Partition restrict_partition(const Partition& p, std::span<const NodeIndex> items) {
  std::vector<BlockId> labels;
  labels.reserve(items.size());
  for (NodeIndex i : items) {
    if (i >= p.size()) fail(ErrorCode::InvalidArgument, "restriction index out of range");
    labels.push_back(p.block_of(i));
  }
  return Partition::from_labels<BlockId>(labels);
}

}  // namespace clanforge
