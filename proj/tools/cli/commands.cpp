#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <locale>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/document.hpp"
#include "cli/fixtures.hpp"
#include "flagdesic/flagdesic.hpp"

namespace flagdesic::cli {

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@name" selects a built-in fixture, "-" reads stdin, anything else is a path.
TangentVector load_vector(const std::string& source, const std::optional<std::string>& mode) {
  std::optional<TangentVector> x;
  if (!source.empty() && source.front() == '@') {
    x = make_fixture(source.substr(1));
    if (!x) throw Error(ErrorCode::InvalidArgument, "unknown example '" + source.substr(1) + "'");
  } else {
    x = parse_vector_document(read_text(source));
  }
  if (mode) return x->to_mode(*mode == "exact" ? Mode::Exact : Mode::Float);
  return *x;
}

std::string fmt(double v, int precision = 12) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(precision);
  os << v;
  return os.str();
}

std::string triple_string(const std::array<std::size_t, 3>& t) {
  return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
}

std::string parts_string(const FlagPartition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.block_count(); ++k) {
    if (k) s += ",";
    s += std::to_string(p.block_size(k));
  }
  return s + ")";
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

void report_verdict(std::ostream& out, const std::string& label, const EquigeodesicVerdict& v) {
  out << label << ": " << (v.is_equigeodesic ? "true" : "false") << "\n";
  out << label << ".worst_residual: " << fmt(v.worst_residual) << "\n";
  if (v.violating_triple) out << label << ".violating_triple: " << triple_string(*v.violating_triple) << "\n";
}

int cmd_check(Streams io, const std::string& input, const std::string& metric_path, double tol,
              const std::optional<std::string>& mode) {
  const TangentVector x = load_vector(input, mode);
  io.out << "partition: " << parts_string(x.partition()) << "\n";
  io.out << "mode: " << to_string(x.mode()) << "\n";
  if (!metric_path.empty()) {
    const InvariantMetric g = parse_metric_document(read_text(metric_path));
    const GeodesicVerdict v = is_geodesic_vector(x, g, tol);
    io.out << "geodesic: " << (v.is_geodesic ? "true" : "false") << "\n";
    io.out << "residual: " << fmt(v.residual) << "\n";
    io.out << "threshold: " << fmt(v.threshold) << "\n";
    return v.is_geodesic ? kAffirmative : kNegative;
  }
  const EquigeodesicVerdict block = is_equigeodesic(x, tol);
  const EquigeodesicVerdict cert = equigeodesic_certificate(x, tol);
  report_verdict(io.out, "block_condition", block);
  report_verdict(io.out, "certificate", cert);
  const bool both = block.is_equigeodesic && cert.is_equigeodesic;
  if (block.is_equigeodesic != cert.is_equigeodesic) {
    io.err << "warning: block condition and bracket certificate disagree at tol " << fmt(tol) << "\n";
  }
  io.out << "equigeodesic: " << (both ? "true" : "false") << "\n";
  return both ? kAffirmative : kNegative;
}

int cmd_canonicalize(Streams io, const std::string& input, const std::string& out_path, double tol) {
  const TangentVector x = load_vector(input, std::string("float"));
  CanonicalForm form;
  try {
    form = canonicalize(x, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotEquigeodesic) throw;
    io.err << "not equigeodesic: " << e.what() << "\n";
    return kNegative;
  }
  io.out << "partition: " << parts_string(x.partition()) << "\n";
  io.out << "pairs:";
  if (form.pairs.empty()) io.out << " none";
  io.out << "\n";
  for (const auto& p : form.pairs) {
    io.out << "  (" << p.row + 1 << "," << p.col + 1 << ") a = " << fmt(p.value) << "\n";
  }
  io.out << "residual: " << fmt(form.residual) << "\n";
  if (!out_path.empty()) write_output(out_path, canonical_to_json(x, form).dump(2) + "\n", io.out);
  return kAffirmative;
}

int cmd_closedness(Streams io, const std::string& input, std::int64_t bound,
                   const std::optional<std::string>& mode) {
  const TangentVector x = load_vector(input, mode);
  ClosednessVerdict v;
  SpectralData s;
  try {
    s = spectral_data(x);
    v = is_killing_closed(x, bound);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ExactSpectrumUnavailable) {
      io.err << "error: " << e.what() << "\nhint: rerun with --mode float\n";
      return kUsageError;
    }
    throw;
  }
  io.out << "mode: " << to_string(x.mode()) << "\n";
  io.out << "spectrum:";
  for (double t : s.thetas) io.out << " " << fmt(t);
  io.out << "\n";
  if (s.exact) {
    io.out << "exact_spectrum:";
    for (const auto& t : *s.exact) {
      if (t.sign == 0) {
        io.out << " 0";
      } else {
        io.out << " " << (t.sign < 0 ? "-" : "+") << "sqrt(" << t.square.get_str() << ")";
      }
    }
    io.out << "\n";
  }
  io.out << "status: " << to_string(v.status) << "\n";
  if (x.mode() == Mode::Float) io.out << "bound: " << v.bound_used << "\n";
  if (v.base_frequency) io.out << "base_frequency: " << fmt(*v.base_frequency) << "\n";
  if (v.base_frequency_squared) io.out << "base_frequency_squared: " << v.base_frequency_squared->get_str() << "\n";
  if (v.period) io.out << "period: " << fmt(*v.period) << "\n";
  if (v.integer_multipliers) {
    io.out << "multipliers:";
    for (auto q : *v.integer_multipliers) io.out << " " << q;
    io.out << "\n";
  }
  if (v.return_defect) io.out << "return_defect: " << fmt(*v.return_defect) << "\n";
  switch (v.status) {
    case ClosednessStatus::Commensurate: return kAffirmative;
    case ClosednessStatus::Undetermined: return kUndetermined;
    default: return kNegative;
  }
}

int cmd_curve(Streams io, const std::string& input, double t_max, std::size_t samples,
              const std::string& out_path) {
  if (t_max < 0.0) throw Error(ErrorCode::InvalidArgument, "--t-max must be non-negative");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "--samples must be positive");
  const TangentVector x = load_vector(input, std::string("float"));
  const FlagPartition& p = x.partition();
  const std::size_t n = p.total();
  const SkewEigen eig(x.matrix());

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(17);
  csv << "t";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) csv << ",re_" << r + 1 << "_" << c + 1 << ",im_" << r + 1 << "_" << c + 1;
  }
  csv << ",d\n";
  const std::size_t rows = t_max == 0.0 ? 1 : samples + 1;
  for (std::size_t k = 0; k < rows; ++k) {
    const double t = rows == 1 ? 0.0 : t_max * static_cast<double>(k) / static_cast<double>(samples);
    const CMatrix e = eig.exp(t);
    double off = 0.0;
    csv << t;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const Complex z = e.f(r, c);
        csv << "," << z.real() << "," << z.imag();
        if (p.block_of(r) != p.block_of(c)) off += std::norm(z);
      }
    }
    csv << "," << std::sqrt(off) << "\n";
  }
  write_output(out_path, csv.str(), io.out);
  return kAffirmative;
}

int cmd_examples(Streams io, const std::string& name, bool list, std::optional<std::uint64_t> seed,
                 const std::string& out_path) {
  if (list || name.empty()) {
    for (const auto& f : fixtures()) io.out << f.name << "  " << f.description << "\n";
    return list ? kAffirmative : kUsageError;
  }
  std::optional<TangentVector> x = make_fixture(name);
  if (!x) {
    io.err << "error: unknown example '" << name << "'; available:";
    for (const auto& f : fixtures()) io.err << " " << f.name;
    io.err << "\n";
    return kUsageError;
  }
  // A seed turns the fixture into a random block-unitary conjugate of itself.
  if (seed) x = x->conjugated(random_block_unitary(x->partition(), *seed));
  write_output(out_path, vector_to_json(*x).dump(2) + "\n", io.out);
  return kAffirmative;
}

int cmd_roots(Streams io, const std::vector<std::size_t>& parts) {
  const FlagPartition p(parts);
  const PositiveRoots roots = build_roots(p);
  io.out << "partition: " << parts_string(p) << "\n";
  io.out << "n: " << p.total() << "\n";
  io.out << "positive_k_roots: " << roots.k.size() << "\n";
  io.out << "positive_m_roots: " << roots.m.size() << "\n";
  io.out << "t_roots:";
  for (const auto& t : t_roots(p)) io.out << " (" << t.block_i + 1 << "," << t.block_j + 1 << ")";
  io.out << "\n";
  io.out << "modules: " << p.pair_count() << "\n";
  io.out << "dim_m: " << tangent_dimension(p) << "\n";
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equigeodesic vectors and closed Killing fields on flag manifolds F(n; n_1, ..., n_s)",
               "flagdesic"};
  app.require_subcommand(1);

  std::string input, metric_path, out_path, name;
  double tol = kDefaultEquigeodesicTolerance;
  std::optional<std::string> mode;
  std::int64_t bound = kDefaultDenominatorBound;
  double t_max = 2.0 * std::numbers::pi;
  std::size_t samples = 200;
  std::optional<std::uint64_t> seed;
  bool list = false;
  std::vector<std::size_t> parts;

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "Arithmetic: float or exact (default: the document's own)")
        ->check(CLI::IsMember({"float", "exact"}));
  };
  const std::string input_help = "Vector document path, '-' for stdin, or @name for a built-in example";

  auto* check = app.add_subcommand("check", "Equigeodesic (or, with a metric, geodesic) test");
  check->add_option("vector", input, input_help)->required();
  check->add_option("metric", metric_path, "Metric document; switches to the single-metric geodesic test");
  check->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  add_mode(check);

  auto* canon = app.add_subcommand("canonicalize", "Block-unitary canonical form of an equigeodesic vector");
  canon->add_option("vector", input, input_help)->required();
  canon->add_option("--out", out_path, "Write U, J and the pair list as JSON");
  canon->add_option("--tol", tol, "Relative tolerance of the equigeodesic precondition")->capture_default_str();

  auto* closed = app.add_subcommand("closedness", "Commensurability of the spectrum of A");
  closed->add_option("vector", input, input_help)->required();
  closed->add_option("--bound", bound, "Continued-fraction denominator bound")->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_mode(closed);

  auto* curve = app.add_subcommand("curve", "Sample exp(tA) along the geodesic as CSV");
  curve->add_option("vector", input, input_help)->required();
  curve->add_option("--t-max", t_max, "Final time")->capture_default_str();
  curve->add_option("--samples", samples, "Number of intervals; rows = samples + 1")->capture_default_str();
  curve->add_option("--out", out_path, "CSV destination (default stdout)");

  auto* examples = app.add_subcommand("examples", "Emit a built-in example document");
  examples->add_option("name", name, "Example name");
  examples->add_flag("--list", list, "List available examples");
  examples->add_option("--seed", seed, "Conjugate by a seeded random block-diagonal unitary");
  examples->add_option("--out", out_path, "Destination (default stdout)");

  auto* roots = app.add_subcommand("roots", "Root and T-root counts of a partition");
  roots->add_option("parts", parts, "Block sizes n_1 ... n_s")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const Streams io{out, err};
  try {
    if (*check) return cmd_check(io, input, metric_path, tol, mode);
    if (*canon) return cmd_canonicalize(io, input, out_path, tol);
    if (*closed) return cmd_closedness(io, input, bound, mode);
    if (*curve) return cmd_curve(io, input, t_max, samples, out_path);
    if (*examples) return cmd_examples(io, name, list, seed, out_path);
    if (*roots) return cmd_roots(io, parts);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace flagdesic::cli
