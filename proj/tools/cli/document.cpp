#include "cli/document.hpp"

#include <charconv>
#include <map>

namespace flagdesic::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::InvalidArgument, "field '" + field + "': " + message);
}

std::pair<std::size_t, std::size_t> parse_key(const std::string& key, std::size_t s) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail("blocks." + key, "key must look like \"i,j\"");
  auto to_index = [&](std::string_view part) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v == 0) {
      fail("blocks." + key, "block indices are positive integers");
    }
    return v;
  };
  const std::string_view k(key);
  const std::size_t i = to_index(k.substr(0, comma));
  const std::size_t j = to_index(k.substr(comma + 1));
  if (i == j) fail("blocks." + key, "diagonal block " + key + " is not part of m");
  if (i > s || j > s) fail("blocks." + key, "block index exceeds the number of parts");
  return {i - 1, j - 1};
}

CMatrix parse_block(const json& rows, std::size_t nr, std::size_t nc, Mode mode, const std::string& field) {
  if (!rows.is_array() || rows.size() != nr) fail(field, "expected " + std::to_string(nr) + " rows");
  CMatrix m(nr, nc, mode);
  for (std::size_t r = 0; r < nr; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != nc) {
      fail(field, "row " + std::to_string(r + 1) + " needs " + std::to_string(nc) + " entries");
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const json& e = row[c];
      const std::string where = field + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]";
      if (mode == Mode::Float) {
        if (e.is_number()) {
          m.f(r, c) = {e.get<double>(), 0.0};
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
          m.f(r, c) = {e[0].get<double>(), e[1].get<double>()};
        } else {
          fail(where, "float entries are [re, im]");
        }
      } else {
        if (e.is_number_integer()) {
          m.q(r, c) = GaussianRational(e.get<long>());
        } else if (e.is_string()) {
          try {
            m.q(r, c) = GaussianRational::parse(e.get<std::string>());
          } catch (const Error& err) {
            fail(where, err.what());
          }
        } else {
          fail(where, "exact entries are strings like \"1/2+3/4i\"");
        }
      }
    }
  }
  return m;
}

std::vector<std::size_t> parse_parts(const json& doc) {
  if (!doc.contains("parts") || !doc["parts"].is_array() || doc["parts"].empty()) {
    fail("parts", "required non-empty integer list");
  }
  std::vector<std::size_t> parts;
  for (const auto& v : doc["parts"]) {
    if (!v.is_number_integer() || v.get<long>() <= 0) fail("parts", "entries must be positive integers");
    parts.push_back(v.get<std::size_t>());
  }
  return parts;
}

json entry_to_json(const Scalar& s) {
  if (s.is_exact()) return s.as_exact().to_string();
  const Complex z = s.as_float();
  return json::array({z.real(), z.imag()});
}

json blocks_to_json(const FlagPartition& p, const CMatrix& a) {
  json blocks = json::object();
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    for (std::size_t j = i + 1; j < p.block_count(); ++j) {
      blocks[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
          matrix_to_json(a.block(p.offset(i), p.offset(j), p.block_size(i), p.block_size(j)));
    }
  }
  return blocks;
}

}  // namespace

TangentVector vector_from_json(const json& doc) {
  if (!doc.is_object()) fail("<root>", "document must be a JSON object");
  const FlagPartition p(parse_parts(doc));
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() != static_cast<long>(p.total())) {
      fail("n", "must equal the sum of parts (" + std::to_string(p.total()) + ")");
    }
  }
  Mode mode = Mode::Float;
  if (doc.contains("mode")) {
    const json& m = doc["mode"];
    if (m == "float") {
      mode = Mode::Float;
    } else if (m == "exact") {
      mode = Mode::Exact;
    } else {
      fail("mode", "must be \"float\" or \"exact\"");
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, CMatrix> upper, lower;
  if (doc.contains("blocks")) {
    if (!doc["blocks"].is_object()) fail("blocks", "must be an object keyed by \"i,j\"");
    for (const auto& [key, value] : doc["blocks"].items()) {
      const auto [i, j] = parse_key(key, p.block_count());
      CMatrix b = parse_block(value, p.block_size(i), p.block_size(j), mode, "blocks." + key);
      (i < j ? upper : lower).emplace(std::pair{i, j}, std::move(b));
    }
  }
  for (const auto& [key, b] : lower) {
    const auto [j, i] = key;
    const std::string field = "blocks." + std::to_string(j + 1) + "," + std::to_string(i + 1);
    const auto it = upper.find({i, j});
    if (it == upper.end()) {
      fail(field, "only i<j blocks are accepted; the lower half is completed as -a_ij*");
    }
    const CMatrix completed = -it->second.adjoint();
    const bool consistent =
        mode == Mode::Exact ? completed == b
                            : (completed - b).frobenius_norm() <= 1e-12 * std::max(1.0, completed.frobenius_norm());
    if (!consistent) fail(field, "inconsistent with -a_ij* of the upper block");
  }
  return TangentVector::from_upper_blocks(p, upper, mode);
}

TangentVector parse_vector_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("JSON parse error: ") + e.what());
  }
  return vector_from_json(doc);
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const TangentVector& x) {
  const FlagPartition& p = x.partition();
  return json{{"n", p.total()},
              {"parts", p.parts()},
              {"mode", std::string(to_string(x.mode()))},
              {"blocks", blocks_to_json(p, x.matrix())}};
}

InvariantMetric parse_metric_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) fail("<root>", "document must be a JSON object");
  const FlagPartition p(parse_parts(doc));
  std::vector<double> table(p.pair_count(), 1.0);
  if (doc.contains("lambda")) {
    if (!doc["lambda"].is_object()) fail("lambda", "must be an object keyed by \"i,j\"");
    for (const auto& [key, value] : doc["lambda"].items()) {
      const auto [i, j] = parse_key(key, p.block_count());
      if (!value.is_number() || !(value.get<double>() > 0.0)) fail("lambda." + key, "must be a positive number");
      table[p.pair_index(i, j)] = value.get<double>();
    }
  }
  return InvariantMetric(p, std::move(table));
}

json canonical_to_json(const TangentVector& x, const CanonicalForm& form) {
  const FlagPartition& p = x.partition();
  json pairs = json::array();
  for (const auto& pair : form.pairs) {
    pairs.push_back({{"row", pair.row + 1}, {"col", pair.col + 1}, {"value", pair.value}});
  }
  return json{{"n", p.total()},
              {"parts", p.parts()},
              {"mode", "float"},
              {"blocks", blocks_to_json(p, form.j)},
              {"unitary", matrix_to_json(form.unitary)},
              {"pairs", std::move(pairs)},
              {"residual", form.residual}};
}

}  // namespace flagdesic::cli
