#include "doctest.h"

#include "confsect/builders.hpp"
#include "confsect/catalog.hpp"
#include "confsect/geometry.hpp"
#include "confsect/verify.hpp"

#include <random>

using namespace confsect;

namespace {

class Constant : public IdentifyingFunction {
 public:
  Constant(Graph g, int n, Point p) : IdentifyingFunction(std::move(g), n), p_(std::move(p)) {}
  std::string method() const override { return "constant"; }
  Point evaluate(const Configuration&) const override { return p_; }
  Json tables() const override { return Json::object(); }

 private:
  Point p_;
};

// Picks a complement component from a hash of the configuration.
class Jumpy : public IdentifyingFunction {
 public:
  using IdentifyingFunction::IdentifyingFunction;
  std::string method() const override { return "jumpy"; }
  Point evaluate(const Configuration& x) const override {
    auto comps = complement_components(g_, x);
    std::size_t h = 0;
    for (const auto& p : x) h = h * 31 + std::hash<std::string>{}(p.t.get_str()) + p.id;
    const Component& c = comps[h % comps.size()];
    return c.pieces.empty() ? Point::at_vertex(c.vertices.front()) : piece_midpoint(c.pieces.front());
  }
  Json tables() const override { return Json::object(); }
};

}  // namespace

TEST_CASE("random configurations are valid and separated") {
  std::mt19937_64 rng(1);
  for (const auto& [name, g] : catalog::standard()) {
    for (int k = 0; k < 50; ++k) {
      Configuration x = random_configuration(g, 3, rng);
      CHECK_NOTHROW(check_configuration(g, x));
    }
  }
}

TEST_CASE("builders pass the section law") {
  auto r = verify_identifying(*build_tree_section(catalog::star(3), 2), 10000, 1);
  CHECK(r.samples == 10000);
  CHECK(r.violation_count == 0);
  CHECK(r.ok());
}

TEST_CASE("a constant function is caught") {
  Constant f(catalog::star(3), 2, Point::at_vertex(0));
  auto r = verify_identifying(f, 1000, 2);
  CHECK(r.violation_count > 0);
  CHECK(r.violations.front().kind == "separation");
  CHECK_FALSE(r.ok());
}

TEST_CASE("antipode on the circle is an isometry") {
  auto f = build_antipode(catalog::circle());
  auto r = verify_continuity(*f, 50, 100, 3, default_lipschitz(f->method()));
  CHECK(r.violation_count == 0);
  CHECK(r.max_ratio <= 1 + 1e-9);
  CHECK(r.samples > 1000);
}

TEST_CASE("tree and chi0 stay within their envelopes") {
  for (const auto& f : {build_tree_section(catalog::star(3), 2), build_chi0_section(catalog::lollipop(), 3)}) {
    auto r = verify_continuity(*f, 50, 100, 4, default_lipschitz(f->method()));
    CHECK(r.violation_count == 0);
    CHECK(r.max_ratio <= default_lipschitz(f->method()));
    CHECK(r.max_ratio > 0);
  }
}

TEST_CASE("a jumping double is flagged") {
  Jumpy f(catalog::theta(), 2);
  auto c = verify_continuity(f, 20, 50, 5, 8);
  CHECK(c.violation_count > 0);
  CHECK(c.max_ratio > 8);
  Jumpy s(catalog::star(3), 2);
  auto t = verify_transition_consistency(s, 300, 6);
  CHECK(t.transition_fail > 0);
  CHECK_FALSE(t.ok());
}

TEST_CASE("builders are consistent with the transition tables") {
  std::vector<FunctionPtr> fs{build_antipode(catalog::theta()), build_antipode(catalog::dumbbell()),
                              build_tree_section(catalog::star(3), 2), build_chi0_section(catalog::lollipop(), 2),
                              build_wedge_section(catalog::wedge(3), 0, 2)};
  for (const auto& f : fs) {
    auto r = verify_transition_consistency(*f, 300, 7);
    CAPTURE(f->method());
    CHECK(r.transition_fail == 0);
    CHECK(r.transition_pass > 300);
  }
}

TEST_CASE("verification is seed-deterministic") {
  auto f = build_chi0_section(catalog::circle(), 2);
  auto a = verify_continuity(*f, 10, 50, 42, 4);
  auto b = verify_continuity(*f, 10, 50, 42, 4);
  CHECK(a.samples == b.samples);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(report_to_json(f->graph(), a) == report_to_json(f->graph(), b));
}

TEST_CASE("flood-fill oracle matches complement_components") {
  Graph theta = catalog::theta();
  Configuration both{Point::at_vertex(0), Point::at_vertex(1)};
  CHECK(oracle_components(theta, both, 64).size() == 3);
  CHECK(oracle_components(theta, both, 64) == complement_components(theta, both));

  std::mt19937_64 rng(8);
  for (const auto& [name, g] : catalog::standard()) {
    for (int k = 0; k < 100; ++k) {
      Configuration x = random_configuration(g, 1 + k % 4, rng);
      auto a = oracle_components(g, x, 64);
      CAPTURE(name);
      CHECK(a == complement_components(g, x));
      CHECK(a == oracle_components(g, x, 256));
    }
  }
}
