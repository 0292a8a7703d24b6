#include "jc/report_json.hpp"

namespace jc::io {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_vector(const std::optional<probe::Vector>& v) { return v ? to_json(*v) : Json(nullptr); }

std::string graph_name(std::size_t n, std::size_t index) {
  return (index < n ? "x" : "y") + std::to_string(index % n + 1);
}

Json map_header(const std::string& command, const MapDocument& doc) {
  Json j;
  j["command"] = command;
  j["n"] = doc.n;
  j["domain"] = doc.domain == Domain::gaussian ? "gaussian" : "rational";
  j["map"] = to_json(doc.map);
  return j;
}

Json form_fields(Json j, const forms::FormReport& r) {
  j["is_keller"] = r.is_keller;
  j["keller_det"] = r.keller_det.to_string();
  j["is_yagzhev"] = r.is_yagzhev;
  j["is_dmap"] = optional_json(r.is_dmap);
  j["nilpotency_index"] = optional_json(r.nilpotency_index);
  j["unit_det"] = optional_json(r.unit_det);
  return j;
}

Json witness_check_fields(const probe::WitnessCheck& c) {
  Json j;
  j["passed"] = c.passed;
  j["distance_to_rowspace"] = c.distance_to_rowspace;
  j["cubic_residual"] = c.cubic_residual;
  j["aw_norm"] = c.aw_norm;
  return j;
}

Json config_json(const probe::ProbeConfig& c) {
  Json j;
  j["r0"] = c.r0;
  j["factor"] = c.factor;
  j["count"] = c.count;
  j["restarts"] = c.restarts;
  j["max_iterations"] = c.max_iterations;
  j["initial_step"] = c.initial_step;
  j["step_shrink"] = c.step_shrink;
  j["min_step"] = c.min_step;
  j["convergence_tol"] = c.convergence_tol;
  j["ratio_tol"] = c.ratio_tol;
  j["tol_zero"] = c.tol_zero;
  j["tol_nonzero"] = c.tol_nonzero;
  j["rank_tol"] = c.rank_tol;
  j["sigma"] = c.sigma;
  j["seed"] = c.seed;
  return j;
}

Json status_json(const std::optional<inv::InverseStatus>& s) {
  return s ? Json(inv::to_string(*s)) : Json(nullptr);
}

}  // namespace

Json to_json(const Coefficient& c) { return c.to_string(); }

Json to_json(const CoeffMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const PolyMap& f, const VariableNamer& name) {
  Json out = Json::array();
  for (const auto& p : f.components()) out.push_back(p.to_string(name));
  return out;
}

Json to_json(const probe::Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const probe::Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json check_json(const MapDocument& doc, const forms::FormReport& report) {
  return form_fields(map_header("check", doc), report);
}

Json check_dmap_json(const CoeffMatrix& a, const forms::FormReport& report) {
  Json j;
  j["command"] = "check-dmap";
  j["n"] = a.rows();
  j["matrix"] = to_json(a);
  j["map"] = to_json(forms::cubic_linear_map(forms::CubicLinearSpec(a)));
  return form_fields(std::move(j), report);
}

Json invert_json(const MapDocument& doc, const inv::InverseCertificate& cert) {
  Json j = map_header("invert", doc);
  j["method"] = inv::to_string(cert.method);
  j["status"] = inv::to_string(cert.status);
  j["degree_bound_used"] = cert.degree_bound_used;
  j["inverse"] = cert.inverse ? to_json(*cert.inverse) : Json(nullptr);
  j["inverse_degree"] = cert.inverse ? Json(cert.inverse->degree()) : Json(nullptr);
  if (cert.witness) {
    const auto& names = cert.witness_variables;
    j["witness"] = cert.witness->to_string([&](std::size_t i) { return i < names.size() ? names[i] : positional_name(i); });
  } else {
    j["witness"] = nullptr;
  }
  j["witness_variables"] = cert.witness_variables;
  j["verified"] = cert.verified;
  return j;
}

Json wang_json(const MapDocument& doc, const std::vector<Polynomial>& residual) {
  Json j = map_header("wang-check", doc);
  Json names = Json::array();
  for (std::size_t i = 0; i < 2 * doc.n; ++i) names.push_back(graph_name(doc.n, i));
  j["variables"] = std::move(names);
  Json res = Json::array();
  bool zero = true;
  for (const auto& p : residual) {
    res.push_back(p.to_string([&](std::size_t i) { return graph_name(doc.n, i); }));
    zero = zero && p.is_zero();
  }
  j["residual"] = std::move(res);
  j["identity_holds"] = zero;
  return j;
}

Json realify_json(const MapDocument& doc, const RealifyOutcome& outcome) {
  Json j = map_header("realify", doc);
  Json names = Json::array();
  for (std::size_t i = 0; i < 2 * doc.n; ++i) names.push_back(forms::realified_name(i));
  j["variables"] = std::move(names);
  j["real_map"] = to_json(outcome.real_map, forms::realified_name);
  j["is_yagzhev"] = outcome.is_yagzhev;
  j["is_keller"] = outcome.keller.is_keller;
  j["keller_det"] = outcome.keller.det.to_string(forms::realified_name);
  Json det;
  det["ok"] = outcome.det.ok;
  det["seed"] = outcome.seed;
  Json samples = Json::array();
  for (const auto& s : outcome.det.samples) {
    Json point = Json::array();
    for (const auto& c : s.point) point.push_back(c.to_string());
    samples.push_back(Json{{"point", std::move(point)},
                           {"real_det", s.real_det.to_string()},
                           {"complex_det", s.complex_det.to_string()},
                           {"agrees", s.agrees}});
  }
  det["samples"] = std::move(samples);
  j["det_check"] = std::move(det);
  return j;
}

Json probe_json(const probe::RealMatrixSpec& spec, const probe::ProbeConfig& config, const probe::ProbeReport& report) {
  Json j;
  j["command"] = "probe";
  j["n"] = spec.dimension();
  j["matrix"] = to_json(spec.a);
  j["form"] = probe::to_string(report.form);
  j["config"] = config_json(config);
  Json traj = Json::array();
  for (const auto& r : report.trajectory) {
    Json rec;
    rec["radius"] = r.radius;
    rec["best_point"] = to_json(r.best_point);
    rec["image_norm"] = r.image_norm;
    rec["ratio"] = optional_json(r.ratio);
    rec["alpha"] = optional_json(r.alpha);
    rec["v"] = optional_vector(r.v);
    rec["w"] = optional_vector(r.w);
    rec["converged"] = r.converged;
    rec["iterations"] = r.iterations;
    traj.push_back(std::move(rec));
  }
  j["trajectory"] = std::move(traj);
  j["verdict"] = probe::to_string(report.verdict);
  j["ratio_limit_estimate"] = optional_json(report.ratio_limit_estimate);
  j["growth_exponent"] = optional_json(report.growth_exponent);
  j["alpha_limit"] = optional_json(report.alpha_limit);
  j["v_limit"] = optional_vector(report.v_limit);
  j["w_limit"] = optional_vector(report.w_limit);
  j["witness"] = optional_vector(report.witness);
  j["witness_check"] = report.witness_check ? witness_check_fields(*report.witness_check) : Json(nullptr);
  if (report.gamma_fit) {
    j["gamma_fit"] = Json{{"gamma", report.gamma_fit->gamma},
                          {"residual", report.gamma_fit->residual},
                          {"clamped", report.gamma_fit->clamped}};
  } else {
    j["gamma_fit"] = nullptr;
  }
  j["notes"] = report.notes;
  return j;
}

Json witness_check_json(const probe::Matrix& a, const probe::Vector& w, const probe::WitnessCheck& check) {
  Json j;
  j["command"] = "witness";
  j["mode"] = "check";
  j["n"] = a.rows();
  j["matrix"] = to_json(a);
  j["vector"] = to_json(w);
  j["check"] = witness_check_fields(check);
  j["witness"] = check.passed ? to_json(w) : Json(nullptr);
  j["interpretation"] = check.passed ? Json(witness_interpretation) : Json(nullptr);
  j["best_residual"] = check.cubic_residual;
  return j;
}

Json witness_search_json(const probe::Matrix& a, const probe::ProbeConfig& config,
                         const probe::WitnessSearchResult& result) {
  Json j;
  j["command"] = "witness";
  j["mode"] = "search";
  j["n"] = a.rows();
  j["matrix"] = to_json(a);
  j["seed"] = config.seed;
  j["restarts"] = config.restarts;
  j["best"] = to_json(result.best);
  j["best_residual"] = result.best_residual;
  j["check"] = witness_check_fields(result.check);
  j["witness"] = optional_vector(result.witness);
  j["interpretation"] = result.witness ? Json(witness_interpretation) : Json(nullptr);
  return j;
}

Json catalog_list_json() {
  Json j;
  j["command"] = "catalog";
  j["action"] = "list";
  Json entries = Json::array();
  for (const auto& e : catalog()) {
    entries.push_back(Json{{"name", e.name}, {"kind", to_string(e.kind)}, {"description", e.description}});
  }
  j["entries"] = std::move(entries);
  return j;
}

Json catalog_show_json(const CatalogEntry& entry, std::uint64_t seed) {
  Json j;
  j["command"] = "catalog";
  j["action"] = "show";
  j["name"] = entry.name;
  j["kind"] = to_string(entry.kind);
  j["description"] = entry.description;
  j["payload"] = entry.kind == PayloadKind::generator ? Json(generator_sample(seed)) : Json(entry.payload);
  const Expectations& e = entry.expect;
  Json expect;
  expect["keller"] = optional_json(e.keller);
  expect["dmap"] = optional_json(e.dmap);
  expect["invertible"] = optional_json(e.invertible);
  expect["nilpotency_index"] = optional_json(e.nilpotency_index);
  expect["inverse"] = optional_json(e.inverse);
  expect["series_status"] = status_json(e.series_status);
  expect["groebner_status"] = status_json(e.groebner_status);
  expect["realify"] = e.realify;
  j["expect"] = std::move(expect);
  return j;
}

Json catalog_run_json(const CatalogRun& run, std::uint64_t seed) {
  Json j;
  j["command"] = "catalog";
  j["action"] = "run";
  j["name"] = run.name;
  j["seed"] = seed;
  j["passed"] = run.passed;
  Json checks = Json::array();
  for (const auto& c : run.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace jc::io
