#include "cli/fixtures.hpp"

#include <map>

namespace flagdesic::cli {

namespace {

using Blocks = std::map<std::pair<std::size_t, std::size_t>, CMatrix>;

CMatrix real_block(std::size_t rows, std::size_t cols, std::vector<double> values) {
  std::vector<Complex> entries(values.begin(), values.end());
  return {rows, cols, std::move(entries)};
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> list = {
      {"f3-u12", "F(3): Weyl vector A_12 = E_12 - E_21"},
      {"fn-211", "F(4;2,1,1): a_12 = (1,0)^T, a_13 = (0,2)^T, a_23 = 0; equigeodesic, not block-diagonal"},
      {"f9-333", "F(9;3,3,3): essentially diagonal with sigma = (1,2,3,4)"},
      {"f4-x2y3", "F(4): a_12 = 2, a_34 = 3; closed Killing field with period 2 pi"},
      {"f4-sqrt2", "F(4): a_12 = 1, a_34 = 1+i; eigenvalue ratio sqrt 2, not closed"},
  };
  return list;
}

std::optional<TangentVector> make_fixture(std::string_view name) {
  Blocks b;
  if (name == "f3-u12") {
    const FlagPartition p = FlagPartition::full_flag(3);
    b.emplace(std::pair{0, 1}, real_block(1, 1, {1}));
    return TangentVector::from_upper_blocks(p, b, Mode::Float);
  }
  if (name == "fn-211") {
    const FlagPartition p({2, 1, 1});
    b.emplace(std::pair{0, 1}, real_block(2, 1, {1, 0}));
    b.emplace(std::pair{0, 2}, real_block(2, 1, {0, 2}));
    return TangentVector::from_upper_blocks(p, b, Mode::Float);
  }
  if (name == "f9-333") {
    const FlagPartition p({3, 3, 3});
    b.emplace(std::pair{0, 1}, real_block(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 0}));
    b.emplace(std::pair{0, 2}, real_block(3, 3, {0, 0, 0, 0, 0, 0, 3, 0, 0}));
    b.emplace(std::pair{1, 2}, real_block(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 4}));
    return TangentVector::from_upper_blocks(p, b, Mode::Float);
  }
  if (name == "f4-x2y3") {
    const FlagPartition p = FlagPartition::full_flag(4);
    b.emplace(std::pair{0, 1}, real_block(1, 1, {2}));
    b.emplace(std::pair{2, 3}, real_block(1, 1, {3}));
    return TangentVector::from_upper_blocks(p, b, Mode::Float);
  }
  if (name == "f4-sqrt2") {
    const FlagPartition p = FlagPartition::full_flag(4);
    b.emplace(std::pair{0, 1}, real_block(1, 1, {1}));
    b.emplace(std::pair{2, 3}, CMatrix(1, 1, std::vector<Complex>{{1.0, 1.0}}));
    return TangentVector::from_upper_blocks(p, b, Mode::Float);
  }
  return std::nullopt;
}

}  // namespace flagdesic::cli
