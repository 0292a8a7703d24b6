#include "jc/catalog.hpp"
#include "jc/cli.hpp"
#include "jc/forms.hpp"
#include "jc/inversion.hpp"
#include "jc/parse.hpp"
#include "jc/probe.hpp"
#include "jc/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace jc;
using namespace jc::io;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const Json& j) { return j.dump(); }

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& seed) {
  return seed ? *seed : seed_from_environment();
}

probe::Matrix real_matrix(const std::string& text) {
  const CoeffMatrix m = parse_matrix(text);
  if (!m.is_real()) throw std::invalid_argument("probe input must be a real matrix");
  probe::Matrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();
    }
  }
  return out;
}

probe::ProbeConfig probe_config(double r0, double factor, unsigned count, unsigned restarts,
                                std::optional<std::uint64_t> seed, unsigned threads) {
  probe::ProbeConfig c;
  c.r0 = r0;
  c.factor = factor;
  c.count = count;
  c.restarts = restarts;
  c.seed = seed_or_env(seed);
  c.threads = threads;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact polynomial-map checks, inversion and properness probes";

  static PyObject* parse_error = PyErr_NewException("jcmaps._core.ParseError", PyExc_ValueError, nullptr);
  m.attr("ParseError") = py::handle(parse_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_error)(py::str(e.what()));
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(parse_error, err.ptr());
    } catch (const inv::Cancelled& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def("normalize_map", [](const std::string& text) { return print_map(parse_map(text).map); });
  m.def("normalize_matrix", [](const std::string& text) { return print_matrix(parse_matrix(text)); });

  m.def("check", [](const std::string& text) {
    const MapDocument doc = parse_map(text);
    return dump(check_json(doc, forms::classify(doc.map)));
  });

  m.def("check_dmap", [](const std::string& text) {
    const CoeffMatrix a = parse_matrix(text);
    return dump(check_dmap_json(a, forms::check_dmap(forms::CubicLinearSpec(a))));
  });

  m.def(
      "invert",
      [](const std::string& text, const std::string& method, std::optional<long> max_degree) {
        const MapDocument doc = parse_map(text);
        if (method != "series" && method != "groebner") {
          throw std::invalid_argument("method must be 'series' or 'groebner'");
        }
        py::gil_scoped_release release;
        const auto cert =
            method == "groebner" ? inv::groebner_inverse(doc.map) : inv::series_inverse(doc.map, max_degree);
        return dump(invert_json(doc, cert));
      },
      py::arg("text"), py::arg("method") = "series", py::arg("max_degree") = py::none());

  m.def("wang_check", [](const std::string& text) {
    const MapDocument doc = parse_map(text);
    return dump(wang_json(doc, forms::wang_identity_residual(doc.map)));
  });

  m.def(
      "realify",
      [](const std::string& text, unsigned samples, std::optional<std::uint64_t> seed) {
        const MapDocument doc = parse_map(text);
        RealifyOutcome r;
        r.real_map = forms::realify(doc.map);
        r.is_yagzhev = forms::check_yagzhev(r.real_map);
        r.keller = forms::check_keller(r.real_map);
        r.seed = seed_or_env(seed);
        r.det = forms::realify_det_check(doc.map, samples, r.seed);
        return dump(realify_json(doc, r));
      },
      py::arg("text"), py::arg("samples") = 20, py::arg("seed") = py::none());

  m.def(
      "probe",
      [](const std::string& text, const std::string& form, double r0, double factor, unsigned count,
         unsigned restarts, std::optional<std::uint64_t> seed, unsigned threads) {
        if (form != "standard" && form != "hat") throw std::invalid_argument("form must be 'standard' or 'hat'");
        const auto spec = probe::RealMatrixSpec::make(real_matrix(text),
                                                      form == "hat" ? probe::MapForm::hat : probe::MapForm::standard);
        const auto config = probe_config(r0, factor, count, restarts, seed, threads);
        py::gil_scoped_release release;
        return dump(probe_json(spec, config, probe::nonproper_scan(spec, config)));
      },
      py::arg("text"), py::arg("form") = "standard", py::arg("r0") = 10.0, py::arg("factor") = 10.0,
      py::arg("count") = 6, py::arg("restarts") = 8, py::arg("seed") = py::none(), py::arg("threads") = 1);

  m.def(
      "witness",
      [](const std::string& text, std::optional<std::vector<double>> vector, unsigned restarts,
         std::optional<std::uint64_t> seed) {
        const auto spec = probe::RealMatrixSpec::make(real_matrix(text));
        probe::ProbeConfig config;
        config.restarts = restarts;
        config.seed = seed_or_env(seed);
        config.validate();
        if (vector) {
          if (static_cast<Eigen::Index>(vector->size()) != spec.dimension()) {
            throw std::invalid_argument("vector length does not match the matrix");
          }
          const probe::Vector w = Eigen::Map<const probe::Vector>(vector->data(), spec.dimension());
          return dump(witness_check_json(spec.a, w, probe::witness_check(spec, w, config)));
        }
        return dump(witness_search_json(spec.a, config, probe::witness_search(spec, config)));
      },
      py::arg("text"), py::arg("vector") = py::none(), py::arg("restarts") = 8, py::arg("seed") = py::none());

  m.def("catalog_list", [] { return dump(catalog_list_json()); });
  m.def(
      "catalog_run",
      [](const std::string& name, std::optional<std::uint64_t> seed) {
        const CatalogEntry* e = find_entry(name);
        if (e == nullptr) throw std::invalid_argument("unknown catalog entry '" + name + "'");
        const std::uint64_t s = seed_or_env(seed);
        return dump(catalog_run_json(run_entry(*e, s), s));
      },
      py::arg("name"), py::arg("seed") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  py::register_exception<probe::RowspaceEmpty>(m, "RowspaceEmpty", PyExc_ValueError);
}
