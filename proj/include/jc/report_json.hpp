#pragma once

#include "jc/catalog.hpp"
#include "jc/forms.hpp"
#include "jc/inversion.hpp"
#include "jc/parse.hpp"
#include "jc/probe.hpp"

#include <json.hpp>

#include <cstdint>

namespace jc::io {

// Keys keep insertion order.
using Json = nlohmann::ordered_json;

inline constexpr const char* witness_interpretation = "necessary condition met (not a proof of non-properness)";

Json to_json(const Coefficient& c);
Json to_json(const CoeffMatrix& m);
Json to_json(const PolyMap& f, const VariableNamer& name = positional_name);
Json to_json(const probe::Vector& v);
Json to_json(const probe::Matrix& m);

Json check_json(const MapDocument& doc, const forms::FormReport& report);
Json check_dmap_json(const CoeffMatrix& a, const forms::FormReport& report);
Json invert_json(const MapDocument& doc, const inv::InverseCertificate& cert);
Json wang_json(const MapDocument& doc, const std::vector<Polynomial>& residual);

struct RealifyOutcome {
  PolyMap real_map;
  bool is_yagzhev = false;
  forms::KellerCheck keller;
  forms::RealifyDetResult det;
  std::uint64_t seed = 0;
};
Json realify_json(const MapDocument& doc, const RealifyOutcome& outcome);

/// The config block omits the thread count.
Json probe_json(const probe::RealMatrixSpec& spec, const probe::ProbeConfig& config, const probe::ProbeReport& report);
Json witness_check_json(const probe::Matrix& a, const probe::Vector& w, const probe::WitnessCheck& check);
Json witness_search_json(const probe::Matrix& a, const probe::ProbeConfig& config,
                         const probe::WitnessSearchResult& result);

Json catalog_list_json();
Json catalog_show_json(const CatalogEntry& entry, std::uint64_t seed);
Json catalog_run_json(const CatalogRun& run, std::uint64_t seed);

}  // namespace jc::io
