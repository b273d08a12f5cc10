#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "knots/catalog.hpp"
#include "knots/errors.hpp"

using namespace knots;

namespace {

// Points the catalog at another directory for the lifetime of the object.
class CatalogOverride {
 public:
  explicit CatalogOverride(const std::filesystem::path& dir) {
    if (const char* old = std::getenv("KNOTS_CATALOG_DIR")) saved_ = old;
    setenv("KNOTS_CATALOG_DIR", dir.c_str(), 1);
  }
  ~CatalogOverride() {
    if (saved_.empty()) {
      unsetenv("KNOTS_CATALOG_DIR");
    } else {
      setenv("KNOTS_CATALOG_DIR", saved_.c_str(), 1);
    }
  }

 private:
  std::string saved_;
};

}  // namespace

TEST_CASE("every catalog entry audits clean") {
  const auto entries = all();
  CHECK(entries.size() >= 9);
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK(audit(e).empty());
    CHECK(is_planar(e.diagram));
    CHECK(std::stoi(e.golden.at("components")) == e.diagram.component_count());
  }
}

TEST_CASE("answer-table values") {
  CHECK(lookup("trefoil-r").golden.at("c2") == "1");
  CHECK(lookup("fig8").golden.at("c2") == "-1");
  CHECK(lookup("unknot").golden.at("c2") == "0");
  CHECK(lookup("5_1").golden.at("conway") == "1 + 3t^2 + t^4");
  CHECK(lookup("fig8").golden.at("conway") == "1 - t^2");
  CHECK(lookup("unknot").golden.at("arf") == "0");
  CHECK(lookup("hopf+").golden.at("lk") == "1");
  CHECK(lookup("hopf-").golden.at("lk") == "-1");
}

TEST_CASE("lookup") {
  CHECK(lookup("Trefoil-R").name == "trefoil-r");
  CHECK(lookup("HOPF+").diagram == lookup("hopf+").diagram);
  CHECK_THROWS_AS(lookup("no-such-knot"), UnknownName);
  CHECK_THROWS_AS(lookup("trivial-n0"), UnknownName);
  CHECK_THROWS_AS(lookup("trivial-nx"), UnknownName);
  const auto t3 = lookup("trivial-n3");
  CHECK(t3.diagram == Diagram::parse("() ; () ; ()"));
  CHECK(audit(t3).empty());
  CHECK(t3.golden.at("colorings3") == "27");
  CHECK(audit(lookup("trivial-n1")).empty());
  CHECK(lookup("trivial-n1").diagram == lookup("unknot").diagram);
}

TEST_CASE("audit reports mismatches") {
  auto e = lookup("trefoil-r");
  e.golden["conway"] = "1 - t^2";
  e.golden["casson"] = "2";
  const auto problems = audit(e);
  CHECK(problems.size() == 2);
  CHECK(compute_golden(lookup("hopf+").diagram, "arf") == "n/a");
  CHECK(compute_golden(lookup("trefoil-r").diagram, "lk") == "n/a");
}

TEST_CASE("catalog directory can be overridden") {
  const auto dir = std::filesystem::temp_directory_path() / "knots-catalog-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "catalog.gauss") << "# scratch\nkink O1+ U1+\n";
  std::ofstream(dir / "golden.json") << R"({"kink": {"conway": "1", "arf": "0"}})";
  {
    const CatalogOverride scope(dir);
    CHECK(catalog_dir() == dir);
    const auto e = lookup("kink");
    CHECK(e.diagram.crossing_count() == 1);
    CHECK(audit(e).empty());
    CHECK(all().size() == 1);
    CHECK_THROWS_AS(lookup("trefoil-r"), UnknownName);
  }
  std::filesystem::remove_all(dir);
  CHECK(lookup("trefoil-r").diagram.crossing_count() == 3);
}
