#include "jc/catalog.hpp"

#include "jc/forms.hpp"
#include "jc/generators.hpp"
#include "jc/parse.hpp"

#include <random>
#include <stdexcept>

namespace jc::io {

std::string to_string(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::map: return "map";
    case PayloadKind::matrix: return "matrix";
    case PayloadKind::generator: return "generator";
    case PayloadKind::reference: return "reference";
  }
  return "unknown";
}

namespace {

using inv::InverseStatus;

CatalogEntry invertible_map(std::string name, std::string description, std::string payload, std::string inverse,
                            bool dmap = false) {
  CatalogEntry e{std::move(name), std::move(description), PayloadKind::map, std::move(payload), {}};
  e.expect.keller = true;
  e.expect.invertible = true;
  e.expect.inverse = std::move(inverse);
  e.expect.series_status = InverseStatus::inverse_found;
  e.expect.groebner_status = InverseStatus::inverse_found;
  if (dmap) e.expect.dmap = true;
  return e;
}

CatalogEntry dmap_matrix(std::string name, std::string description, std::string payload, std::string inverse) {
  CatalogEntry e{std::move(name), std::move(description), PayloadKind::matrix, std::move(payload), {}};
  e.expect.keller = true;
  e.expect.dmap = true;
  e.expect.nilpotency_index = 2;
  e.expect.invertible = true;
  e.expect.inverse = std::move(inverse);
  e.expect.series_status = InverseStatus::inverse_found;
  e.expect.groebner_status = InverseStatus::inverse_found;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(invertible_map("identity-1", "identity map in one variable", "n=1; P1 = x1", "n=1; P1 = x1"));
  out.push_back(invertible_map("identity-2", "identity map in two variables", "n=2; P1 = x1; P2 = x2",
                               "n=2; P1 = x1; P2 = x2"));
  out.push_back(invertible_map("identity-3", "identity map in three variables", "n=3; P1 = x1; P2 = x2; P3 = x3",
                               "n=3; P1 = x1; P2 = x2; P3 = x3"));
  out.push_back(invertible_map("cubic-triangular", "elementary triangular map (x1 + x2^3, x2)",
                               "n=2; P1 = x1 + x2^3; P2 = x2", "n=2; P1 = x1 - x2^3; P2 = x2", true));
  out.push_back(invertible_map("triangular-composite", "composite of two triangular maps, degree 6",
                               "n=2; P1 = x1 + x2^2; P2 = x2 + (x1 + x2^2)^3",
                               "n=2; P1 = x1 - (x2 - x1^3)^2; P2 = x2 - x1^3"));
  out.push_back(dmap_matrix("dmap-nilpotent-upper", "cubic-linear map of the nilpotent Jordan block", "0,1\n0,0",
                            "n=2; P1 = x1 - x2^3; P2 = x2"));
  out.push_back(dmap_matrix("dmap-rank-one", "cubic-linear map of a rank-one nilpotent matrix", "1,1\n-1,-1",
                            "n=2; P1 = x1 - (x1 + x2)^3; P2 = x2 + (x1 + x2)^3"));
  {
    CatalogEntry e = dmap_matrix("gaussian-d2", "cubic-linear map over Q(i), checked through its real form",
                                 "0,i\n0,0", "n=2; P1 = x1 + i*x2^3; P2 = x2");
    e.expect.realify = true;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"nondmap-identity", "A = I2; X + X^{*3} fails the Keller condition", PayloadKind::matrix,
                   "1,0\n0,1", {}};
    e.expect.keller = false;
    e.expect.dmap = false;
    e.expect.invertible = false;
    e.expect.series_status = InverseStatus::not_polynomial_within_bound;
    e.expect.groebner_status = InverseStatus::not_invertible_groebner;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"square-fold", "two-to-one fold (x1^2, x2)", PayloadKind::map, "n=2; P1 = x1^2; P2 = x2", {}};
    e.expect.keller = false;
    e.expect.invertible = false;
    e.expect.series_status = InverseStatus::singular_linear_part;
    e.expect.groebner_status = InverseStatus::not_invertible_groebner;
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"quadratic-series", "(x1 + x1^2, x2), whose formal inverse never terminates", PayloadKind::map,
                   "n=2; P1 = x1 + x1^2; P2 = x2", {}};
    e.expect.keller = false;
    e.expect.invertible = false;
    e.expect.series_status = InverseStatus::not_polynomial_within_bound;
    e.expect.groebner_status = InverseStatus::not_invertible_groebner;
    out.push_back(std::move(e));
  }
  out.push_back(CatalogEntry{"random-nilpotent",
                             "seeded conjugates S N S^-1 of strictly upper triangular N, n = 2..4",
                             PayloadKind::generator,
                             "",
                             {}});
  out.push_back(CatalogEntry{"pinchuk", "Pinchuk's real counterexample: referenced, formula not shipped",
                             PayloadKind::reference, "", {}});
  return out;
}

void add(CatalogRun& run, std::string name, bool passed, std::string detail = {}) {
  run.passed = run.passed && passed;
  run.checks.push_back(CatalogCheck{std::move(name), passed, std::move(detail)});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void check_inversion(CatalogRun& run, const PolyMap& f, const Expectations& expect) {
  const auto series = inv::series_inverse(f);
  const auto groebner = inv::groebner_inverse(f);
  if (expect.series_status) {
    add(run, "series-status", series.status == *expect.series_status, inv::to_string(series.status));
  }
  if (expect.groebner_status) {
    add(run, "groebner-status", groebner.status == *expect.groebner_status, inv::to_string(groebner.status));
  }
  if (expect.invertible) {
    const bool found = series.inverse.has_value() && groebner.inverse.has_value();
    add(run, "invertible", found == *expect.invertible, yes_no(found));
  }
  if (series.inverse && groebner.inverse) {
    add(run, "engines-agree", *series.inverse == *groebner.inverse);
    add(run, "verify-inverse", inv::verify_inverse(f, *series.inverse));
    const long bound = inv::inverse_degree_bound(f);
    add(run, "degree-bound", series.inverse->degree() <= bound,
        std::to_string(series.inverse->degree()) + " <= " + std::to_string(bound));
    if (expect.inverse) {
      const PolyMap expected = parse_map(*expect.inverse).map;
      add(run, "expected-inverse", *series.inverse == expected, series.inverse->to_string());
    }
  }
}

void run_map(CatalogRun& run, const CatalogEntry& entry) {
  const PolyMap f = parse_map(entry.payload).map;
  add(run, "round-trip", parse_map(print_map(f)).map == f);
  const auto keller = forms::check_keller(f);
  if (entry.expect.keller) add(run, "keller", keller.is_keller == *entry.expect.keller, keller.det.to_string());
  if (entry.expect.dmap) {
    const auto spec = forms::recognize_cubic_linear(f);
    const bool dmap = spec && forms::check_dmap(*spec).is_dmap.value_or(false);
    add(run, "dmap", dmap == *entry.expect.dmap, yes_no(dmap));
  }
  check_inversion(run, f, entry.expect);
}

void run_matrix(CatalogRun& run, const CatalogEntry& entry, std::uint64_t seed) {
  const CoeffMatrix a = parse_matrix(entry.payload);
  add(run, "round-trip", parse_matrix(print_matrix(a)) == a);
  const forms::CubicLinearSpec spec(a);
  const forms::FormReport report = forms::check_dmap(spec);
  const bool dmap = report.is_dmap.value_or(false);
  if (entry.expect.dmap) add(run, "dmap", dmap == *entry.expect.dmap, yes_no(dmap));
  add(run, "unit-determinant-agrees", report.unit_det == report.is_dmap);
  if (entry.expect.nilpotency_index) {
    add(run, "nilpotency-index", report.nilpotency_index == entry.expect.nilpotency_index,
        report.nilpotency_index ? std::to_string(*report.nilpotency_index) : "none");
  }
  if (entry.expect.keller) {
    add(run, "keller", report.is_keller == *entry.expect.keller, report.keller_det.to_string());
  }
  if (dmap) {
    for (const Coefficient& lambda :
         {Coefficient(-2), Coefficient(-1), Coefficient::fraction(1, 2), Coefficient(3)}) {
      add(run, "scaled-family lambda=" + lambda.to_string(), forms::check_prop1(spec, lambda));
    }
  }
  const PolyMap f = forms::cubic_linear_map(spec);
  check_inversion(run, f, entry.expect);
  if (entry.expect.realify) {
    const PolyMap real = forms::realify(f);
    add(run, "realify-yagzhev", forms::check_yagzhev(real));
    add(run, "realify-keller", forms::check_keller(real).is_keller);
    const auto det = forms::realify_det_check(f, 20, seed);
    add(run, "realify-det-identity", det.ok && det.samples.size() == 20,
        std::to_string(det.samples.size()) + " samples");
  }
}

void run_generator(CatalogRun& run, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  unsigned agree = 0;
  unsigned nilpotent = 0;
  unsigned total = 0;
  unsigned dmaps = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int k = 0; k < 5; ++k, ++total) {
      const CoeffMatrix a = forms::random_nilpotent_conjugate(n, rng);
      CoeffMatrix power = a;
      for (std::size_t p = 1; p < n; ++p) power = power * a;
      if (power.is_zero()) ++nilpotent;
      const auto report = forms::check_dmap(forms::CubicLinearSpec(a));
      if (report.unit_det == report.is_dmap) ++agree;
      if (report.is_dmap.value_or(false)) ++dmaps;
    }
  }
  add(run, "conjugates-nilpotent", nilpotent == total, std::to_string(nilpotent) + "/" + std::to_string(total));
  add(run, "unit-determinant-agrees", agree == total,
      std::to_string(agree) + "/" + std::to_string(total) + ", " + std::to_string(dmaps) + " D-maps");
  unsigned constructed = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (int k = 0; k < 3; ++k) {
      if (forms::check_dmap(forms::random_dmap_spec(n, rng)).is_dmap.value_or(false)) ++constructed;
    }
  }
  add(run, "monomial-conjugates-are-dmaps", constructed == 6, std::to_string(constructed) + "/6");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string generator_sample(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return print_matrix(forms::random_nilpotent_conjugate(3, rng));
}

CatalogRun run_entry(const CatalogEntry& entry, std::uint64_t seed) {
  CatalogRun run;
  run.name = entry.name;
  switch (entry.kind) {
    case PayloadKind::map:
      run_map(run, entry);
      break;
    case PayloadKind::matrix:
      run_matrix(run, entry, seed);
      break;
    case PayloadKind::generator:
      run_generator(run, seed);
      break;
    case PayloadKind::reference:
      throw std::invalid_argument("catalog entry '" + entry.name + "' is reference-only and cannot be run");
  }
  return run;
}

}  // namespace jc::io
