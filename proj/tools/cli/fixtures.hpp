#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagdesic/flag.hpp"

namespace flagdesic::cli {

struct Fixture {
  std::string name;
  std::string description;
};

/// Built-in example corpus, all with small integer entries.
const std::vector<Fixture>& fixtures();

std::optional<TangentVector> make_fixture(std::string_view name);

}  // namespace flagdesic::cli
