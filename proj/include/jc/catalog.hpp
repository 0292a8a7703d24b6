#pragma once

#include "jc/inversion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jc::io {

enum class PayloadKind { map, matrix, generator, reference };

std::string to_string(PayloadKind kind);

/// Claimed properties. None of them is trusted: run_entry recomputes each
/// one. For matrix payloads they describe the map X + (AX)^{*3}.
struct Expectations {
  std::optional<bool> keller;
  std::optional<bool> dmap;
  std::optional<bool> invertible;
  std::optional<unsigned> nilpotency_index;
  std::optional<std::string> inverse;  // map text
  std::optional<inv::InverseStatus> series_status;
  std::optional<inv::InverseStatus> groebner_status;
  bool realify = false;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  PayloadKind kind = PayloadKind::map;
  std::string payload;  // map text, matrix text, or empty
  Expectations expect;
};

struct CatalogCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CatalogRun {
  std::string name;
  std::vector<CatalogCheck> checks;
  bool passed = true;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

/// Sample matrix emitted by the random-nilpotent generator for seed.
std::string generator_sample(std::uint64_t seed);

/// Recomputes every expectation of the entry. Throws std::invalid_argument
/// for reference-only entries, which carry nothing to run.
CatalogRun run_entry(const CatalogEntry& entry, std::uint64_t seed);

}  // namespace jc::io
