#include "jc/cli.hpp"

#include "jc/catalog.hpp"
#include "jc/forms.hpp"
#include "jc/inversion.hpp"
#include "jc/parse.hpp"
#include "jc/probe.hpp"
#include "jc/report_json.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace jc::io {

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("JC_SEED");
  if (env == nullptr || *env == '\0') return default_seed;
  const std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("JC_SEED must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

probe::Matrix to_real(const CoeffMatrix& m) {
  if (!m.is_real()) throw std::invalid_argument("probe input must be a real matrix");
  probe::Matrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
    }
  }
  return out;
}

void parse_radii(const std::string& text, probe::ProbeConfig& config) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw std::invalid_argument("--radii expects R0:factor:count, got '" + text + "'");
  try {
    std::size_t used = 0;
    config.r0 = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("");
    config.factor = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
    const unsigned long count = std::stoul(parts[2], &used);
    if (used != parts[2].size() || count > 1000) throw std::invalid_argument("");
    config.count = static_cast<unsigned>(count);
  } catch (const std::exception&) {
    throw std::invalid_argument("--radii expects R0:factor:count, got '" + text + "'");
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_bool(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

std::string fmt(double x) {
  std::ostringstream ss;
  ss << std::setprecision(10) << x;
  return ss.str();
}

std::string fmt(const probe::Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += fmt(v(i));
  }
  return out + ")";
}

void print_components(std::ostream& out, const PolyMap& f, const VariableNamer& name, const std::string& label) {
  for (std::size_t k = 0; k < f.arity(); ++k) {
    out << "  " << label << k + 1 << " = " << f[k].to_string(name) << "\n";
  }
}

void print_form_report(std::ostream& out, const forms::FormReport& r) {
  out << "keller:      " << yes_no(r.is_keller) << " (det J = " << r.keller_det.to_string() << ")\n";
  out << "yagzhev:     " << yes_no(r.is_yagzhev) << "\n";
  out << "d-map:       " << opt_bool(r.is_dmap) << "\n";
  if (r.is_dmap) {
    out << "nilpotency:  " << (r.nilpotency_index ? std::to_string(*r.nilpotency_index) : "not nilpotent") << "\n";
    out << "unit det:    " << opt_bool(r.unit_det) << "\n";
  }
}

struct Options {
  bool json = false;
  std::string file;
  std::string method = "series";
  std::optional<long> max_degree;
  std::optional<std::uint64_t> seed;
  unsigned samples = 20;
  std::string form = "standard";
  std::optional<std::string> radii;
  std::optional<std::string> vector;
  probe::ProbeConfig probe;
  std::string entry;
};

int emit(std::ostream& out, const Options& o, const Json& j, int code, const std::function<void()>& text) {
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    text();
  }
  return code;
}

int cmd_check(const Options& o, std::ostream& out) {
  const MapDocument doc = parse_map(read_input(o.file));
  const forms::FormReport r = forms::classify(doc.map);
  return emit(out, o, check_json(doc, r), r.is_keller ? exit_ok : exit_negative, [&] {
    out << "map (n=" << doc.n << "):\n";
    print_components(out, doc.map, positional_name, "P");
    print_form_report(out, r);
  });
}

int cmd_check_dmap(const Options& o, std::ostream& out) {
  const CoeffMatrix a = parse_matrix(read_input(o.file));
  const forms::FormReport r = forms::check_dmap(forms::CubicLinearSpec(a));
  const bool dmap = r.is_dmap.value_or(false);
  return emit(out, o, check_dmap_json(a, r), dmap ? exit_ok : exit_negative, [&] {
    out << "matrix A:\n" << print_matrix(a);
    print_form_report(out, r);
  });
}

int cmd_invert(const Options& o, std::ostream& out) {
  const MapDocument doc = parse_map(read_input(o.file));
  const inv::InverseCertificate cert =
      o.method == "groebner" ? inv::groebner_inverse(doc.map) : inv::series_inverse(doc.map, o.max_degree);
  const bool found = cert.status == inv::InverseStatus::inverse_found;
  return emit(out, o, invert_json(doc, cert), found ? exit_ok : exit_negative, [&] {
    out << "method:  " << inv::to_string(cert.method) << "\n";
    out << "status:  " << inv::to_string(cert.status) << "\n";
    out << "bound:   " << cert.degree_bound_used << "\n";
    if (cert.inverse) {
      out << "inverse (degree " << cert.inverse->degree() << ", verified " << yes_no(cert.verified) << "):\n";
      print_components(out, *cert.inverse, positional_name, "G");
    }
    if (cert.witness) {
      const auto& names = cert.witness_variables;
      out << "witness: "
          << cert.witness->to_string([&](std::size_t i) { return i < names.size() ? names[i] : positional_name(i); })
          << "\n";
    }
  });
}

int cmd_wang(const Options& o, std::ostream& out) {
  const MapDocument doc = parse_map(read_input(o.file));
  const auto residual = forms::wang_identity_residual(doc.map);
  const Json j = wang_json(doc, residual);
  const bool holds = j["identity_holds"].get<bool>();
  return emit(out, o, j, holds ? exit_ok : exit_negative, [&] {
    out << "quadratic identity residual over (x, y):\n";
    for (std::size_t k = 0; k < residual.size(); ++k) {
      out << "  R" << k + 1 << " = " << j["residual"][k].get<std::string>() << "\n";
    }
    out << "identity holds: " << yes_no(holds) << "\n";
  });
}

int cmd_realify(const Options& o, std::ostream& out) {
  const MapDocument doc = parse_map(read_input(o.file));
  RealifyOutcome r;
  r.real_map = forms::realify(doc.map);
  r.is_yagzhev = forms::check_yagzhev(r.real_map);
  r.keller = forms::check_keller(r.real_map);
  r.seed = o.seed.value_or(seed_from_environment());
  r.det = forms::realify_det_check(doc.map, o.samples, r.seed);
  return emit(out, o, realify_json(doc, r), r.det.ok ? exit_ok : exit_negative, [&] {
    out << "real form in (y1, z1, ..., yn, zn):\n";
    print_components(out, r.real_map, forms::realified_name, "Q");
    out << "yagzhev:   " << yes_no(r.is_yagzhev) << "\n";
    out << "keller:    " << yes_no(r.keller.is_keller) << " (det J = " << r.keller.det.to_string(forms::realified_name)
        << ")\n";
    std::size_t agree = 0;
    for (const auto& s : r.det.samples) agree += s.agrees ? 1 : 0;
    out << "det identity: " << agree << "/" << r.det.samples.size() << " sample points agree\n";
  });
}

probe::ProbeConfig probe_config(const Options& o) {
  probe::ProbeConfig c = o.probe;
  c.seed = o.seed.value_or(seed_from_environment());
  if (o.radii) parse_radii(*o.radii, c);
  c.validate();
  return c;
}

int cmd_probe(const Options& o, std::ostream& out) {
  const probe::ProbeConfig config = probe_config(o);
  const auto form = o.form == "hat" ? probe::MapForm::hat : probe::MapForm::standard;
  const auto spec = probe::RealMatrixSpec::make(to_real(parse_matrix(read_input(o.file))), form);
  const probe::ProbeReport report = probe::nonproper_scan(spec, config);
  return emit(out, o, probe_json(spec, config, report), exit_ok, [&] {
    out << "form: " << probe::to_string(report.form) << ", seed " << config.seed << "\n";
    out << std::left << std::setw(14) << "radius" << std::setw(18) << "min |F|" << std::setw(18) << "ratio"
        << std::setw(14) << "alpha"
        << "converged\n";
    for (const auto& r : report.trajectory) {
      out << std::setw(14) << fmt(r.radius) << std::setw(18) << fmt(r.image_norm) << std::setw(18)
          << (r.ratio ? fmt(*r.ratio) : "-") << std::setw(14) << (r.alpha ? fmt(*r.alpha) : "-")
          << yes_no(r.converged) << "\n";
    }
    out << std::right;
    out << "verdict: " << probe::to_string(report.verdict) << "\n";
    if (report.ratio_limit_estimate) out << "ratio limit:     " << fmt(*report.ratio_limit_estimate) << "\n";
    if (report.growth_exponent) out << "growth exponent: " << fmt(*report.growth_exponent) << "\n";
    if (report.alpha_limit) out << "alpha limit:     " << fmt(*report.alpha_limit) << "\n";
    if (report.witness) out << "witness:         " << fmt(*report.witness) << "\n";
    if (report.gamma_fit) {
      out << "gamma:           " << fmt(report.gamma_fit->gamma) << (report.gamma_fit->clamped ? " (clamped)" : "")
          << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
  });
}

void print_witness_check(std::ostream& out, const probe::WitnessCheck& c) {
  out << "passed:               " << yes_no(c.passed) << "\n";
  out << "distance to Im(A^T):  " << fmt(c.distance_to_rowspace) << "\n";
  out << "|A (AW)^{*3}|:        " << fmt(c.cubic_residual) << "\n";
  out << "|AW|:                 " << fmt(c.aw_norm) << "\n";
  if (c.passed) out << "witness: " << witness_interpretation << "\n";
}

int cmd_witness(const Options& o, std::ostream& out) {
  const probe::ProbeConfig config = probe_config(o);
  const auto spec = probe::RealMatrixSpec::make(to_real(parse_matrix(read_input(o.file))));
  if (o.vector) {
    CoeffMatrix row;
    try {
      row = parse_matrix(*o.vector);
    } catch (const ParseError& e) {
      throw std::invalid_argument("--vector: " + e.message());
    }
    if (row.rows() != 1 || static_cast<Eigen::Index>(row.cols()) != spec.dimension()) {
      throw std::invalid_argument("--vector needs " + std::to_string(spec.dimension()) + " comma-separated entries");
    }
    const probe::Vector w = to_real(row).row(0).transpose();
    const auto check = probe::witness_check(spec, w, config);
    return emit(out, o, witness_check_json(spec.a, w, check), check.passed ? exit_ok : exit_negative, [&] {
      out << "candidate W = " << fmt(w) << "\n";
      print_witness_check(out, check);
    });
  }
  probe::WitnessSearchResult result;
  try {
    result = probe::witness_search(spec, config);
  } catch (const probe::RowspaceEmpty& e) {
    if (o.json) {
      Json j;
      j["command"] = "witness";
      j["mode"] = "search";
      j["n"] = spec.dimension();
      j["matrix"] = to_json(spec.a);
      j["seed"] = config.seed;
      j["restarts"] = config.restarts;
      j["best"] = nullptr;
      j["best_residual"] = nullptr;
      j["check"] = nullptr;
      j["witness"] = nullptr;
      j["interpretation"] = nullptr;
      out << j.dump(2) << "\n";
    } else {
      out << "no witness: " << e.what() << "\n";
    }
    return exit_negative;
  }
  return emit(out, o, witness_search_json(spec.a, config, result), result.witness ? exit_ok : exit_negative, [&] {
    out << "best unit W in Im(A^T): " << fmt(result.best) << "\n";
    out << "best residual:          " << fmt(result.best_residual) << "\n";
    print_witness_check(out, result.check);
  });
}

const CatalogEntry& lookup(const std::string& name) {
  const CatalogEntry* e = find_entry(name);
  if (e == nullptr) throw std::invalid_argument("unknown catalog entry '" + name + "'; try 'catalog list'");
  return *e;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  return emit(out, o, catalog_list_json(), exit_ok, [&] {
    for (const auto& e : catalog()) {
      out << std::left << std::setw(22) << e.name << std::setw(11) << to_string(e.kind) << e.description << "\n";
    }
    out << std::right;
  });
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
  const CatalogEntry& e = lookup(o.entry);
  const std::uint64_t seed = o.seed.value_or(seed_from_environment());
  const Json j = catalog_show_json(e, seed);
  return emit(out, o, j, exit_ok, [&] {
    out << e.name << " (" << to_string(e.kind) << "): " << e.description << "\n";
    const std::string payload = j["payload"].get<std::string>();
    if (!payload.empty()) out << payload << (payload.back() == '\n' ? "" : "\n");
    for (const auto& [key, value] : j["expect"].items()) {
      if (!value.is_null() && !(value.is_boolean() && key == "realify" && !value.get<bool>())) {
        out << "expect " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  });
}

int cmd_catalog_run(const Options& o, std::ostream& out) {
  const CatalogEntry& e = lookup(o.entry);
  const std::uint64_t seed = o.seed.value_or(seed_from_environment());
  const CatalogRun run = run_entry(e, seed);
  return emit(out, o, catalog_run_json(run, seed), run.passed ? exit_ok : exit_negative, [&] {
    for (const auto& c : run.checks) {
      out << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << " [" << c.detail << "]";
      out << "\n";
    }
    out << run.name << ": " << (run.passed ? "all checks passed" : "FAILED") << "\n";
  });
}

void add_probe_options(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Seed for restart directions (default: JC_SEED or 20240531)");
  sub->add_option("--restarts", o.probe.restarts, "Restarts per sphere minimization");
  sub->add_option("--threads", o.probe.threads, "Worker threads for restarts; results do not depend on it");
  sub->add_option("--max-iterations", o.probe.max_iterations, "Iteration cap per restart");
  sub->add_option("--convergence-tol", o.probe.convergence_tol, "Relative objective change treated as converged");
  sub->add_option("--ratio-tol", o.probe.ratio_tol, "Tolerance on the cosine-ratio limit");
  sub->add_option("--tol-zero", o.probe.tol_zero, "Threshold below which a residual counts as zero");
  sub->add_option("--tol-nonzero", o.probe.tol_nonzero, "Threshold above which a norm counts as nonzero");
  sub->add_option("--rank-tol", o.probe.rank_tol, "Relative singular-value cutoff for rank decisions");
  sub->add_option("--sigma", o.probe.sigma, "Image-norm bound for the bounded-image verdict");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks, inversion and properness probing for polynomial maps", "jcmaps"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print a machine-readable JSON report");

  auto* check = app.add_subcommand("check", "Keller, Yagzhev and D-map classification of a map file");
  check->add_option("file", o.file, "Map file (- for stdin)")->required();

  auto* check_dmap = app.add_subcommand("check-dmap", "Nilpotency test for X + (AX)^{*3} given a matrix file");
  check_dmap->add_option("file", o.file, "Matrix file (- for stdin)")->required();

  auto* invert = app.add_subcommand("invert", "Polynomial inverse or a certificate that none exists");
  invert->add_option("file", o.file, "Map file (- for stdin)")->required();
  invert->add_option("--method", o.method, "series or groebner")->check(CLI::IsMember({"series", "groebner"}));
  invert->add_option("--max-degree", o.max_degree, "Truncation degree for the series engine")
      ->check(CLI::PositiveNumber);

  auto* wang = app.add_subcommand("wang-check", "Quadratic injectivity identity for a map of degree <= 2");
  wang->add_option("file", o.file, "Map file (- for stdin)")->required();

  auto* realify = app.add_subcommand("realify", "Real form of a map over Q(i) with the determinant identity");
  realify->add_option("file", o.file, "Map file (- for stdin)")->required();
  realify->add_option("--samples", o.samples, "Sample points for the determinant identity")
      ->check(CLI::Range(1U, 10000U));
  realify->add_option("--seed", o.seed, "Seed for sample points (default: JC_SEED or 20240531)");

  auto* probe = app.add_subcommand("probe", "Numerical properness probe for a cubic-linear matrix");
  probe->add_option("file", o.file, "Matrix file (- for stdin)")->required();
  probe->add_option("--form", o.form, "standard: X + (AX)^{*3}; hat: X + A X^{*3}")
      ->check(CLI::IsMember({"standard", "hat"}));
  probe->add_option("--radii", o.radii, "Radius schedule R0:factor:count");
  add_probe_options(probe, o);

  auto* witness = app.add_subcommand("witness", "Check or search for W in Im(A^T) with A (AW)^{*3} = 0, AW != 0");
  witness->add_option("file", o.file, "Matrix file (- for stdin)")->required();
  witness->add_option("--vector", o.vector, "Candidate W as comma-separated entries");
  add_probe_options(witness, o);

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog entries");
  auto* cat_show = cat->add_subcommand("show", "Show one entry and its expected properties");
  cat_show->add_option("name", o.entry, "Entry name")->required();
  cat_show->add_option("--seed", o.seed, "Generator seed (default: JC_SEED or 20240531)");
  auto* cat_run = cat->add_subcommand("run", "Re-derive every expected property of an entry");
  cat_run->add_option("name", o.entry, "Entry name")->required();
  cat_run->add_option("--seed", o.seed, "Seed for randomized checks (default: JC_SEED or 20240531)");

  for (auto* sub : {check, check_dmap, invert, wang, realify, probe, witness, cat, cat_list, cat_show, cat_run}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*check_dmap) return cmd_check_dmap(o, out);
    if (*invert) return cmd_invert(o, out);
    if (*wang) return cmd_wang(o, out);
    if (*realify) return cmd_realify(o, out);
    if (*probe) return cmd_probe(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*cat_list) return cmd_catalog_list(o, out);
    if (*cat_show) return cmd_catalog_show(o, out);
    if (*cat_run) return cmd_catalog_run(o, out);
  } catch (const ParseError& e) {
    err << "error: " << o.file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace jc::io
