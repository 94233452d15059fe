#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace flagdesic {

/// Ordered partition n = n_1 + ... + n_s describing F(n; n_1, ..., n_s).
/// Block indices are 0-based in the C++ API; documents and the CLI use 1-based.
class FlagPartition {
 public:
  // Throws InvalidPartition on an empty list or a zero part.
  explicit FlagPartition(std::vector<std::size_t> parts);

  static FlagPartition full_flag(std::size_t n);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t block_count() const { return parts_.size(); }
  std::size_t total() const { return total_; }
  std::size_t block_size(std::size_t i) const { return parts_[i]; }
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t block_of(std::size_t global_index) const;
  bool is_full_flag() const;

  // Unordered block pairs {i, j}, i < j, enumerated lexicographically.
  std::size_t pair_count() const { return parts_.size() * (parts_.size() - 1) / 2; }
  std::size_t pair_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> pair_at(std::size_t index) const;

  friend bool operator==(const FlagPartition&, const FlagPartition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

}  // namespace flagdesic
