#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knots/diagram.hpp"

namespace knots {

// Golden values are kept as the canonical text of the computed value:
// polynomials as printed by to_string, integers in decimal, booleans as
// "true"/"false", per-pair linking numbers as a space-separated list over
// pairs (0,1), (0,2), ..., (1,2), ...
struct CatalogEntry {
  std::string name;
  Diagram diagram;
  std::map<std::string, std::string> golden;
};

// Directory holding catalog.gauss and golden.json: $KNOTS_CATALOG_DIR if set,
// else the data directory of the source tree.
std::filesystem::path catalog_dir();

// Case-insensitive. "trivial-n<k>" (k >= 1) is synthesized as k free loops
// with golden values attached. UnknownName otherwise.
CatalogEntry lookup(std::string_view name);

// Every shipped entry in file order.
std::vector<CatalogEntry> all();

// Recomputes every golden key of `e`; returns "key: expected X, got Y" for
// each mismatch. Unknown keys are reported as mismatches.
std::vector<std::string> audit(const CatalogEntry& e);

// The value `audit` would compute for `key` on diagram d ("n/a" when the
// invariant does not apply, e.g. arf of a link).
std::string compute_golden(const Diagram& d, std::string_view key);

}  // namespace knots
