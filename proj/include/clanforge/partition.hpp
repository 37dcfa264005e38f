#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clanforge/graph.hpp"

namespace clanforge {

using BlockId = std::uint32_t;

/// Assignment of each of `size()` items to exactly one block. Block ids are
/// contiguous in 0..block_count()-1 and no block is empty.
class Partition {
public:
  Partition() = default;

  /// Validates contiguity; throws InvalidArgument on gaps.
  explicit Partition(std::vector<BlockId> block_of);

  /// Renumbers arbitrary labels to 0..k-1 in order of first appearance.
  template <typename Label>
  static Partition from_labels(std::span<const Label> labels);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  BlockId block_of(std::size_t item) const { return block_of_[item]; }
  std::span<const BlockId> blocks() const noexcept { return block_of_; }

  std::vector<std::size_t> block_sizes() const;
  std::vector<std::vector<NodeIndex>> members() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<BlockId> block_of_;
  std::size_t block_count_ = 0;
};

/// Partition of `items` (positions into `p`), renumbered compactly. Item i of
/// the result is items[i].
Partition restrict_partition(const Partition& p, std::span<const NodeIndex> items);

extern template Partition Partition::from_labels<BlockId>(std::span<const BlockId>);
extern template Partition Partition::from_labels<std::int64_t>(std::span<const std::int64_t>);
extern template Partition Partition::from_labels<std::uint64_t>(std::span<const std::uint64_t>);

}  // namespace clanforge
