#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knots/arf_casson.hpp"
#include "knots/catalog.hpp"
#include "knots/colorings.hpp"
#include "knots/conway.hpp"
#include "knots/errors.hpp"
#include "knots/linking.hpp"
#include "knots/moves.hpp"
#include "knots/spatial.hpp"

namespace {

using nlohmann::json;
using namespace knots;

enum Exit { kOk = 0, kPropertyFailure = 1, kParseError = 2, kDomainError = 3, kDegenerate = 4 };

// Thrown for malformed command input that is not a diagram syntax error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::optional<std::string> name;
  Diagram diagram;
};

// A catalog name wins over reading the text as a Gauss code.
Input resolve(const std::string& text) {
  try {
    CatalogEntry e = lookup(text);
    return {e.name, std::move(e.diagram)};
  } catch (const UnknownName&) {
    return {std::nullopt, Diagram::parse(text)};
  }
}

const std::vector<std::string> kInvariantNames{"lk2", "lk", "arf", "casson", "conway", "colorings"};

std::vector<std::string> default_invariants(const Diagram& d) {
  if (d.component_count() == 1) return {"arf", "casson", "conway", "colorings"};
  return {"lk2", "lk", "conway", "colorings"};
}

int writhe(const Diagram& d) {
  int w = 0;
  for (CrossingId c = 1; c <= d.crossing_count(); ++c) w += d.sign(c);
  return w;
}

json evaluate(const Diagram& d, const std::string& inv) {
  if (inv == "lk2") return linking_matrix(d).lk2;
  if (inv == "lk") return linking_matrix(d).lk;
  if (inv == "arf") return arf(d);
  if (inv == "casson") return casson(d);
  if (inv == "conway") return to_string(conway(d));
  if (inv == "colorings") {
    json out = json::object();
    for (int p : {3, 5}) {
      const ColoringCount c = count_colorings(d, p);
      out[std::to_string(p)] = {{"total", c.total}, {"proper", c.proper}, {"colorable", c.proper > 0}};
    }
    return out;
  }
  // Test hook for the fuzz harness: not an invariant.
  if (inv == "writhe") return writhe(d);
  throw InputError("unknown invariant '" + inv + "'");
}

json evaluate_all(const Diagram& d, const std::vector<std::string>& invs) {
  json out = json::object();
  for (const auto& inv : invs) out[inv] = evaluate(d, inv);
  return out;
}

std::string render(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& row : v) {
      if (!out.empty()) out += '\n';
      for (std::size_t k = 0; k < row.size(); ++k) out += (k ? " " : "") + row[k].dump();
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [p, c] : v.items()) {
      if (!out.empty()) out += '\n';
      out += "p=" + p + ": " + c["total"].dump() + " total, " + c["proper"].dump() + " proper";
    }
    return out;
  }
  return v.dump();
}

void print_table(std::ostream& os, const json& invariants) {
  std::size_t width = 0;
  for (const auto& [k, v] : invariants.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : invariants.items()) {
    std::istringstream lines(render(v));
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << (first ? k : "") << line << '\n';
      first = false;
    }
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
  }
  for (const auto& inv : out)
    if (std::find(kInvariantNames.begin(), kInvariantNames.end(), inv) == kInvariantNames.end())
      throw InputError("unknown invariant '" + inv + "' (choose from lk2, lk, arf, casson, conway, colorings)");
  return out;
}

json header(const Input& in) {
  return {{"name", in.name ? json(*in.name) : json(nullptr)}, {"code", to_string(in.diagram.code())}};
}

int cmd_compute(const std::string& text, const std::vector<std::string>& inv_raw, bool as_json) {
  const Input in = resolve(text);
  auto invs = split_list(inv_raw);
  if (invs.empty()) invs = default_invariants(in.diagram);
  const json values = evaluate_all(in.diagram, invs);
  if (as_json) {
    json out = header(in);
    out["invariants"] = values;
    std::cout << out.dump(2) << '\n';
  } else if (invs.size() == 1) {
    std::cout << render(values[invs.front()]) << '\n';
  } else {
    std::cout << "code  " << to_string(in.diagram.code()) << '\n';
    print_table(std::cout, values);
  }
  return kOk;
}

int cmd_fuzz(const std::string& text, int steps, std::uint64_t seed, int max_crossings,
             const std::vector<std::string>& inv_raw, bool broken, bool as_json) {
  const Input in = resolve(text);
  auto invs = split_list(inv_raw);
  if (invs.empty()) invs = default_invariants(in.diagram);
  if (broken) invs.push_back("writhe");
  WalkPlan plan;
  plan.seed = seed;
  plan.steps = steps;
  plan.max_crossings = max_crossings;
  const json baseline = evaluate_all(in.diagram, invs);
  const auto trace = walk_trace(in.diagram, plan);
  json mismatch = nullptr;
  for (std::size_t k = 1; k < trace.size() && mismatch.is_null(); ++k) {
    if (trace[k] == trace[k - 1]) continue;
    for (const auto& inv : invs) {
      const json got = evaluate(trace[k], inv);
      if (got != baseline[inv]) {
        mismatch = {{"step", k},
                    {"invariant", inv},
                    {"expected", baseline[inv]},
                    {"got", got},
                    {"code", to_string(trace[k].code())}};
        break;
      }
    }
  }
  const bool pass = mismatch.is_null();
  if (as_json) {
    json out = header(in);
    out["invariants"] = baseline;
    out["steps"] = steps;
    out["seed"] = seed;
    out["final_crossings"] = trace.back().crossing_count();
    out["pass"] = pass;
    out["witness"] = mismatch;
    std::cout << out.dump(2) << '\n';
  } else if (pass) {
    std::cout << "pass: " << steps << " steps, seed " << seed << ", invariants unchanged ("
              << trace.back().crossing_count() << " crossings at the end)\n";
  } else {
    std::cout << "FAIL at step " << mismatch["step"] << ": " << mismatch["invariant"].get<std::string>()
              << " expected " << render(mismatch["expected"]) << ", got " << render(mismatch["got"]) << '\n'
              << "  diagram " << mismatch["code"].get<std::string>() << '\n';
  }
  return pass ? kOk : kPropertyFailure;
}

std::vector<std::vector<Point3>> read_point_sets(const std::string& path, std::size_t n) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  const json doc = json::parse(file);
  auto to_set = [&](const json& arr) {
    std::vector<Point3> pts;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 3) throw InputError("points must be [x, y, z] triples");
      pts.push_back({p[0].get<double>(), p[1].get<double>(), p[2].get<double>()});
    }
    if (pts.size() != n) throw InputError("expected " + std::to_string(n) + " points, got " + std::to_string(pts.size()));
    return pts;
  };
  if (!doc.is_array() || doc.empty()) throw InputError("point file must hold a JSON array");
  // Either one set [[x,y,z],...] or a list of sets.
  if (doc[0].is_array() && !doc[0].empty() && doc[0][0].is_number()) return {to_set(doc)};
  std::vector<std::vector<Point3>> sets;
  for (const auto& s : doc) sets.push_back(to_set(s));
  return sets;
}

int cmd_geom(const std::string& which, const std::string& points_file, std::uint64_t seed, int trials,
             bool as_json) {
  const bool k7 = which == "k7";
  const std::size_t n = k7 ? 7 : 6;
  std::vector<std::vector<Point3>> sets;
  std::vector<std::uint64_t> seeds;
  if (!points_file.empty()) {
    sets = read_point_sets(points_file, n);
    seeds.assign(sets.size(), seed);
  } else {
    for (int t = 0; t < trials; ++t) {
      seeds.push_back(seed + static_cast<std::uint64_t>(t));
      sets.push_back(random_points(static_cast<int>(n), seeds.back()));
    }
  }
  json rows = json::array();
  int missing = 0;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    json row = {{"trial", t}, {"seed", seeds[t]}};
    if (k7) {
      const SevenPointResult r = verify_seven_points(sets[t], seeds[t]);
      row["witness"] = r.witness ? json(*r.witness) : json(nullptr);
      row["knotted_cycles"] = r.knotted_cycles;
      row["parity"] = r.arf_parity;
      missing += !r.witness;
    } else {
      const SixPointResult r = verify_six_points(sets[t]);
      row["witness"] = r.witness ? json::array({r.witness->first, r.witness->second}) : json(nullptr);
      row["linked_partitions"] = r.linked_partitions;
      row["parity"] = r.linked_partitions % 2;
      missing += !r.witness;
    }
    rows.push_back(row);
  }
  if (as_json) {
    std::cout << json{{"name", which}, {"trials", rows}, {"witnessed", rows.size() - missing}}.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      std::cout << "trial " << row["trial"] << " seed " << row["seed"] << ": ";
      if (row["witness"].is_null()) {
        std::cout << "no witness";
      } else if (k7) {
        std::cout << "knotted cycle";
        for (int v : row["witness"]) std::cout << ' ' << v;
        std::cout << ", " << row["knotted_cycles"] << " of 360 cycles with arf 1";
      } else {
        const auto& w = row["witness"];
        std::cout << "linked triangles " << w[0][0] << w[0][1] << w[0][2] << " | " << w[1][0] << w[1][1] << w[1][2]
                  << ", " << row["linked_partitions"] << " of 10 partitions linked";
      }
      std::cout << ", parity " << row["parity"] << '\n';
    }
    std::cout << (rows.size() - missing) << " of " << rows.size() << " trials witnessed\n";
  }
  return missing == 0 ? kOk : kPropertyFailure;
}

int cmd_catalog(bool as_json) {
  json rows = json::array();
  int bad = 0;
  for (const auto& e : all()) {
    const auto problems = audit(e);
    bad += !problems.empty();
    rows.push_back({{"name", e.name}, {"code", to_string(e.diagram.code())}, {"invariants", e.golden},
                    {"audit", problems}});
  }
  if (as_json) {
    std::cout << rows.dump(2) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r["name"].get<std::string>().size());
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(static_cast<int>(width) + 2) << r["name"].get<std::string>()
                << std::setw(8) << (r["audit"].empty() ? "ok" : "MISMATCH") << r["code"].get<std::string>() << '\n';
      for (const auto& p : r["audit"]) std::cout << "    " << p.get<std::string>() << '\n';
    }
  }
  return bad == 0 ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot and link invariants from signed Gauss codes"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input;
  std::vector<std::string> invs;
  auto* compute = app.add_subcommand("compute", "Compute invariants of a catalog name or Gauss code");
  compute->add_option("input", input, "Catalog name or Gauss code")->required();
  compute->add_option("--inv", invs, "Invariants: lk2, lk, arf, casson, conway, colorings (comma separated)");
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int steps = 200, max_crossings = 0, trials = 1;
  std::uint64_t seed = 0;
  bool broken = false;
  auto* fuzz = app.add_subcommand("fuzz", "Random Reidemeister walk; invariants must not change");
  fuzz->add_option("input", input, "Catalog name or Gauss code")->required();
  fuzz->add_option("--steps", steps, "Walk length")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", seed, "Walk seed");
  fuzz->add_option("--max-crossings", max_crossings, "Skip growing moves at this size (0: no cap)");
  fuzz->add_option("--inv", invs, "Invariants to track (default: all applicable)");
  fuzz->add_flag("--break", broken, "Also track the writhe, which is not invariant (harness self-test)");
  fuzz->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string which, points_file;
  auto* geom = app.add_subcommand("geom", "Linked triangles among 6 points, knotted cycles among 7");
  geom->add_option("theorem", which, "linked-triangles or k7")->required()->check(CLI::IsMember({"linked-triangles", "k7"}));
  geom->add_option("--points", points_file, "JSON file: [[x,y,z],...] or a list of such sets");
  geom->add_option("--seed", seed, "First seed of random point sets");
  geom->add_option("--trials", trials, "Number of random point sets")->check(CLI::PositiveNumber);
  geom->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* catalog = app.add_subcommand("catalog", "List catalog entries and audit their golden values");
  catalog->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }
  const bool as_json = format == "json";
  try {
    if (*compute) return cmd_compute(input, invs, as_json);
    if (*fuzz) return cmd_fuzz(input, steps, seed, max_crossings, invs, broken, as_json);
    if (*geom) return cmd_geom(which, points_file, seed, trials, as_json);
    if (*catalog) return cmd_catalog(as_json);
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ConsistencyError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const GenericityFailure& e) {
    std::cerr << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const knots::Error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}
