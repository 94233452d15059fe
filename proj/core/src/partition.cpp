#include "flagdesic/partition.hpp"

#include <algorithm>
#include <string>

#include "flagdesic/errors.hpp"

namespace flagdesic {

FlagPartition::FlagPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::InvalidPartition, "partition needs at least one part");
  offsets_.reserve(parts_.size());
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] == 0) {
      throw Error(ErrorCode::InvalidPartition, "part " + std::to_string(k + 1) + " is zero");
    }
    offsets_.push_back(total_);
    total_ += parts_[k];
  }
}

FlagPartition FlagPartition::full_flag(std::size_t n) {
  return FlagPartition(std::vector<std::size_t>(n, 1));
}

std::size_t FlagPartition::block_of(std::size_t global_index) const {
  if (global_index >= total_) throw Error(ErrorCode::InvalidArgument, "index outside the partition");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global_index);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

bool FlagPartition::is_full_flag() const {
  return std::all_of(parts_.begin(), parts_.end(), [](std::size_t n) { return n == 1; });
}

std::size_t FlagPartition::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t s = parts_.size();
  if (i == j || j >= s) {
    throw Error(ErrorCode::InvalidArgument,
                "no block pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  // Pairs (0,1..s-1), (1,2..s-1), ...
  return i * s - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> FlagPartition::pair_at(std::size_t index) const {
  const std::size_t s = parts_.size();
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const std::size_t row = s - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw Error(ErrorCode::InvalidArgument, "pair index out of range");
}

}  // namespace flagdesic
