#include "knots/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "knots/arf_casson.hpp"
#include "knots/colorings.hpp"
#include "knots/conway.hpp"
#include "knots/errors.hpp"
#include "knots/linking.hpp"

#ifndef KNOTS_DEFAULT_CATALOG_DIR
#define KNOTS_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace knots {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open catalog file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RawEntry {
  std::string name;
  std::string code;
};

std::vector<RawEntry> load_codes() {
  std::vector<RawEntry> out;
  std::istringstream in(read_file(catalog_dir() / "catalog.gauss"));
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto split = line.find_first_of(" \t", start);
    if (split == std::string::npos) throw SyntaxError("catalog line without a code: " + line);
    out.push_back({lower(line.substr(start, split - start)), line.substr(line.find_first_not_of(" \t", split))});
  }
  return out;
}

std::map<std::string, std::string> load_golden(const std::string& name) {
  const auto doc = nlohmann::json::parse(read_file(catalog_dir() / "golden.json"));
  std::map<std::string, std::string> out;
  if (auto it = doc.find(name); it != doc.end())
    for (const auto& [key, value] : it->items()) out[key] = value.get<std::string>();
  return out;
}

std::string join_pairs(const std::vector<std::vector<int>>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) out += (out.empty() ? "" : " ") + std::to_string(m[i][j]);
  return out;
}

std::string power_string(int base, int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v *= static_cast<std::uint64_t>(base);
  return std::to_string(v);
}

CatalogEntry trivial_link(std::string name, int k) {
  GaussCode code;
  code.components.assign(k, {});
  CatalogEntry e{std::move(name), Diagram(code), {}};
  e.golden["components"] = std::to_string(k);
  e.golden["conway"] = k == 1 ? "1" : "0";
  e.golden["colorings3"] = power_string(3, k);
  e.golden["colorings5"] = power_string(5, k);
  e.golden["colorable3"] = e.golden["colorable5"] = k > 1 ? "true" : "false";
  if (k > 1) {
    std::vector<std::vector<int>> zero(k, std::vector<int>(k, 0));
    e.golden["lk2"] = e.golden["lk"] = join_pairs(zero);
  } else {
    e.golden["arf"] = e.golden["casson"] = e.golden["c2"] = "0";
  }
  return e;
}

}  // namespace

std::filesystem::path catalog_dir() {
  if (const char* env = std::getenv("KNOTS_CATALOG_DIR"); env && *env) return env;
  return KNOTS_DEFAULT_CATALOG_DIR;
}

CatalogEntry lookup(std::string_view name) {
  const std::string key = lower(name);
  if (key.starts_with("trivial-n")) {
    const std::string digits = key.substr(9);
    if (!digits.empty() && digits.size() <= 3 && std::all_of(digits.begin(), digits.end(), ::isdigit) &&
        std::stoi(digits) >= 1)
      return trivial_link(key, std::stoi(digits));
  }
  for (const auto& raw : load_codes())
    if (raw.name == key) return {raw.name, Diagram::parse(raw.code), load_golden(raw.name)};
  throw UnknownName("no catalog entry named '" + std::string(name) + "'");
}

std::vector<CatalogEntry> all() {
  std::vector<CatalogEntry> out;
  for (const auto& raw : load_codes()) out.push_back({raw.name, Diagram::parse(raw.code), load_golden(raw.name)});
  return out;
}

std::string compute_golden(const Diagram& d, std::string_view key) {
  const bool knot = d.component_count() == 1;
  if (key == "components") return std::to_string(d.component_count());
  if (key == "conway") return to_string(conway(d));
  if (key == "arf") return knot ? std::to_string(arf(d)) : "n/a";
  if (key == "casson") return knot ? std::to_string(casson(d)) : "n/a";
  if (key == "c2") return knot ? std::to_string(coefficient(d, 2)) : "n/a";
  if (key == "lk2") return knot ? "n/a" : join_pairs(linking_matrix(d).lk2);
  if (key == "lk") return knot ? "n/a" : join_pairs(linking_matrix(d).lk);
  if (key == "colorings3") return std::to_string(count_colorings(d, 3).total);
  if (key == "colorings5") return std::to_string(count_colorings(d, 5).total);
  if (key == "colorable3") return is_colorable(d, 3) ? "true" : "false";
  if (key == "colorable5") return is_colorable(d, 5) ? "true" : "false";
  return "unknown key";
}

std::vector<std::string> audit(const CatalogEntry& e) {
  std::vector<std::string> out;
  if (!is_planar(e.diagram)) out.push_back("genus: expected 0");
  for (const auto& [key, expected] : e.golden) {
    const std::string got = compute_golden(e.diagram, key);
    if (got != expected) out.push_back(key + ": expected " + expected + ", got " + got);
  }
  return out;
}

}  // namespace knots
