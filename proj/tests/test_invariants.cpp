#include <map>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "origami/error.hpp"
#include "origami/invariants.hpp"

using namespace origami;

TEST_CASE("stratum examples") {
  const Stratum torus = stratum(parse_origami("x=(1); y=(1); eps=+"));
  CHECK(format_stratum(torus) == "A1(0)");
  const Stratum pillow = stratum(parse_origami("x=(1,2); y=(1,2); eps=+-"));
  CHECK(format_stratum(pillow) == "Q0(-1,-1,-1,-1)");
  CHECK(origami_genus(parse_origami("x=(1,2); y=(1,2); eps=+-")) == 0);
  CHECK(format_stratum(stratum(parse_origami("x=(1); y=(1); eps=-"))) == "A1(0)");

  // Commutator a 3-cycle: a single vertex of angle 6 pi.
  const auto l = parse_origami("x=(1,2,3); y=(1)(2)(3); eps=+++");
  const auto h2 = parse_origami("x=(1,2)(3); y=(1,3)(2); eps=+++");
  CHECK(format_stratum(stratum(l)) == "A1(0,0,0)");
  CHECK(translation_orders(h2.x, h2.y) == std::vector<int>{4});
  CHECK(format_stratum(stratum(h2)) == "A2(4)");
  CHECK(origami_genus(h2) == 2);

  CHECK_THROWS_AS(stratum(parse_origami("x=(1,2)(3,4); y=(1)(2)(3)(4); eps=++++")), Error);
}

TEST_CASE("stratum agrees with the corner walk for every origami up to degree 4") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& p : partitions(d)) {
      const Permutation x = canonical_x(p);
      for (std::uint64_t r = 0; r < factorial(d); ++r) {
        const Permutation y = Permutation::unrank(d, r);
        if (!is_connected(x, y)) continue;
        for (std::uint32_t e = 0; e < (1u << d); ++e) {
          const Origami o{x, y, SignVector::from_rank(d, e)};
          const Stratum s = stratum(o);
          CAPTURE(format_origami(o));
          CHECK(s.orders == oracle::corner_walk_orders(oracle::from(o)));
          int total = 0;
          for (int k : s.orders) total += k;
          CHECK(total == 4 * s.genus - 4);
          if (s.abelian)
            for (int k : s.orders) CHECK(k % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("stratum is constant on classes and agrees with the commutator for translation surfaces") {
  for (int d = 1; d <= 5; ++d) {
    const Census c = Census::build(d);
    for (const auto& cls : c.classes()) {
      const Stratum s = stratum(cls.representative());
      CHECK(s.abelian == cls.abelian);
      if (d > 4 && !cls.abelian) continue;
      for (const auto& m : c.members(cls.id)) {
        const Origami o{cls.x, m.y, m.eps};
        if (d <= 4) CHECK(stratum(o) == s);
        if (m.eps.all_plus()) CHECK(translation_orders(o.x, o.y) == s.orders);
      }
    }
  }
}

TEST_CASE("invariant keys are constant on components and preserved by the mirror") {
  for (int d = 1; d <= 6; ++d) {
    const Census c = Census::build(d);
    const ClassAction a = build_action(c);
    const auto comps = components(a, c);
    std::map<std::uint32_t, std::uint32_t> comp_of;
    for (const auto& comp : comps)
      for (auto id : comp.members) comp_of[id] = comp.id;
    for (const auto& comp : comps) {
      InvariantKey key;
      REQUIRE_NOTHROW(key = invariant_key(comp, c));
      const auto& image = comps[comp_of[a.mirror[comp.base()]]];
      CHECK(invariant_key(image, c) == key);
      CHECK(same_coset_action(comp, comp, a));
    }
  }
}

TEST_CASE("no ambiguous keys up to degree 5") {
  for (int d = 1; d <= 5; ++d) {
    const Census c = Census::build(d);
    const ClassAction a = build_action(c);
    const auto r = galois_report(c, a, components(a, c));
    CAPTURE(d);
    CHECK(r.groups.empty());
    CHECK(r.abelian.ambiguous == 0);
    CHECK(r.nonabelian.ambiguous == 0);
  }
}

TEST_CASE("report rendering") {
  const Census c = Census::build(6);
  const ClassAction a = build_action(c);
  const auto comps = components(a, c);
  const auto r = galois_report(c, a, comps);
  REQUIRE_FALSE(r.groups.empty());
  for (const auto& g : r.groups) {
    CHECK(g.components.size() >= 2);
    CHECK(g.mirror_images.size() == g.components.size());
    CHECK_FALSE(g.relationship.empty());
  }
  const auto j = nlohmann::json::parse(render_report(r, ReportFormat::Json));
  CHECK(j["degree"] == 6);
  CHECK(j["groups"].size() == r.groups.size());
  CHECK(j["summary"]["abelian"]["classes"] == 490);
  CHECK(j["summary"]["non_abelian"]["components"] == 88);

  const std::string csv = render_report(r, ReportFormat::Csv);
  CHECK(csv.rfind("no,stratum,index,valency,curve_genus,components,relationship\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.groups.size() + 1));
  CHECK(csv.find("6-1,\"A3(4,4)\",9,\"(3^3|2^4,1|4,3,2)\"") != std::string::npos);

  const std::string text = render_report(r, ReportFormat::Text);
  CHECK(text.find("abelian     classes=490 components=28 genus=0") != std::string::npos);
  CHECK(text.find("note: reference summary lists 13 non-abelian ambiguous keys") != std::string::npos);
}

TEST_CASE("reference values") {
  CHECK_FALSE(reference_values(8).has_value());
  const auto r7 = reference_values(7);
  REQUIRE(r7.has_value());
  CHECK(r7->abelian.components == 41);
  CHECK(r7->stated_cases == 9u);
  CHECK(r7->detail_rows_abelian + r7->detail_rows_nonabelian == 8);
}
