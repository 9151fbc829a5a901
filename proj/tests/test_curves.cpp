#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "doctest.h"
#include "origami/curves.hpp"

using namespace origami;

namespace {

struct Pipeline {
  Census census;
  ClassAction action;
  std::vector<CurveComponent> comps;
};

const Pipeline& pipeline(int d) {
  static std::map<int, Pipeline> cache;
  auto it = cache.find(d);
  if (it == cache.end()) {
    Census c = Census::build(d, 2);
    ClassAction a = build_action(c, 2);
    auto comps = components(a, c);
    it = cache.emplace(d, Pipeline{std::move(c), std::move(a), std::move(comps)}).first;
  }
  return it->second;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Genus of the surface glued from copies of the fundamental domain with
// corners (cusp, rho, i, rho + 1).
int coset_surface_genus(const CurveComponent& comp, const ClassAction& a) {
  std::map<std::uint32_t, int> at;
  for (std::size_t k = 0; k < comp.members.size(); ++k) at[comp.members[k]] = static_cast<int>(k);
  const int n = static_cast<int>(comp.members.size());
  enum { CUSP, RHO, I, RHO1 };
  UnionFind uf(4 * n);
  for (std::uint32_t id : comp.members) {
    const int f = at[id];
    const int t = at[a.phi_T[id]];
    const int s = at[a.phi_S[id]];
    uf.unite(4 * f + RHO1, 4 * t + RHO);
    uf.unite(4 * f + CUSP, 4 * t + CUSP);
    uf.unite(4 * f + RHO, 4 * s + RHO1);
    uf.unite(4 * f + I, 4 * s + I);
  }
  std::set<int> vertices;
  for (int k = 0; k < 4 * n; ++k) vertices.insert(uf.find(k));
  const int euler = static_cast<int>(vertices.size()) - 2 * n + n;
  REQUIRE((2 - euler) % 2 == 0);
  return (2 - euler) / 2;
}

}  // namespace

TEST_CASE("component counts up to degree 6") {
  const int abelian[] = {1, 1, 2, 5, 8, 28};
  const int nonabelian[] = {0, 1, 1, 6, 13, 88};
  for (int d = 1; d <= 6; ++d) {
    const auto& p = pipeline(d);
    int ab = 0, non = 0;
    for (const auto& comp : p.comps) (comp.abelian ? ab : non)++;
    CAPTURE(d);
    CHECK(ab == abelian[d - 1]);
    CHECK(non == nonabelian[d - 1]);
  }
}

TEST_CASE("components partition the classes and carry consistent valencies") {
  for (int d = 1; d <= 5; ++d) {
    const auto& p = pipeline(d);
    std::size_t total = 0;
    for (const auto& comp : p.comps) {
      total += comp.index();
      const auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::size_t{0}); };
      CHECK(sum(comp.valency.order3) == comp.index());
      CHECK(sum(comp.valency.order2) == comp.index());
      CHECK(sum(comp.valency.cusps) == comp.index());
      CHECK(comp.genus >= 0);
      CHECK(comp.genus == coset_surface_genus(comp, p.action));
      for (auto id : comp.members) CHECK(p.census.at(id).abelian == comp.abelian);
    }
    CHECK(total == p.census.size());
    for (std::size_t k = 1; k < p.comps.size(); ++k) CHECK(p.comps[k - 1].base() < p.comps[k].base());
  }
}

TEST_CASE("mirror maps components onto components with the same data") {
  for (int d = 2; d <= 6; ++d) {
    const auto& p = pipeline(d);
    std::map<std::uint32_t, std::uint32_t> comp_of;
    for (const auto& comp : p.comps)
      for (auto id : comp.members) comp_of[id] = comp.id;
    for (const auto& comp : p.comps) {
      const auto image = comp_of[p.action.mirror[comp.base()]];
      for (auto id : comp.members) CHECK(comp_of[p.action.mirror[id]] == image);
      CHECK(p.comps[image].index() == comp.index());
      CHECK(p.comps[image].valency == comp.valency);
      CHECK(p.comps[image].genus == comp.genus);
    }
  }
}

TEST_CASE("Veech data: representatives and Schreier generators") {
  for (int d = 1; d <= 5; ++d) {
    const auto& p = pipeline(d);
    for (const auto& comp : p.comps) {
      const auto v = veech_data(comp, p.action);
      CHECK(v.base == comp.base());
      REQUIRE(v.representatives.size() == comp.index());
      std::set<std::uint32_t> reached;
      for (std::size_t k = 0; k < v.representatives.size(); ++k) {
        CHECK(apply_word(p.action, v.base, v.representatives[k]) == v.cosets[k]);
        reached.insert(v.cosets[k]);
      }
      CHECK(reached.size() == comp.index());
      CHECK(v.schreier_count == comp.index() + 1);
      for (const auto& g : v.generators) CHECK(apply_word(p.action, v.base, g) == v.base);
    }
  }
  const auto& p1 = pipeline(1);
  const auto v = veech_data(p1.comps[0], p1.action);
  REQUIRE(v.generators.size() == 2);
  CHECK(format_word(v.generators[0]) == "T");
  CHECK(format_word(v.generators[1]) == "S");
  CHECK(format_word(v.representatives[0]) == "1");
}

TEST_CASE("word helpers") {
  const Word w{Gen::T, Gen::S, Gen::Sinv, Gen::Tinv, Gen::S};
  CHECK(format_word(free_reduce(w)) == "S");
  CHECK(format_word(inverse({Gen::T, Gen::S})) == "S^-1*T^-1");
  CHECK(format_word({}) == "1");
}

TEST_CASE("diagram export") {
  for (int d = 1; d <= 5; ++d) {
    const auto& p = pipeline(d);
    for (const auto& comp : p.comps) {
      const std::string dot = export_diagram(comp, p.action);
      const std::regex node(R"(  c(\d+) \[label=\"\d+\", word=\"[^\"]*\", cusp=(\d+), cusp_width=(\d+))");
      std::set<std::string> nodes;
      std::map<int, int> cusp_width;
      for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node); it != std::sregex_iterator(); ++it) {
        nodes.insert((*it)[1]);
        cusp_width[std::stoi((*it)[2])] = std::stoi((*it)[3]);
      }
      CHECK(nodes.size() == comp.index());
      std::vector<int> widths;
      for (const auto& [_, w] : cusp_width) widths.push_back(w);
      std::sort(widths.rbegin(), widths.rend());
      CHECK(widths == comp.cusp_widths());
      const std::regex edge(R"(-> c\d+ \[label=(\w))");
      int t_edges = 0, s_edges = 0;
      for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
        ((*it)[1] == "T" ? t_edges : s_edges)++;
      CHECK(t_edges == static_cast<int>(comp.index()));
      CHECK(s_edges == static_cast<int>(comp.valency.order2.size()));
    }
  }
  const auto& p1 = pipeline(1);
  const std::string dot = export_diagram(p1.comps[0], p1.action);
  CHECK(dot.find("c0 -> c0 [label=T]") != std::string::npos);
  CHECK(dot.find("c0 -> c0 [label=S, dir=none]") != std::string::npos);
}

TEST_CASE("valency formatting and genus formula") {
  Valency v{{3, 3, 3, 3, 3}, {2, 2, 2, 2, 2, 2, 2, 1}, {5, 4, 3, 3}};
  CHECK(format_valency(v) == "(3^5|2^7,1|5,4,3^2)");
  CHECK(curve_genus(15, v) == 0);
  CHECK(curve_genus(1, Valency{{1}, {1}, {1}}) == 0);
  CHECK_THROWS(curve_genus(2, Valency{{1, 1}, {2}, {1, 1}}));
}

TEST_CASE("components do not depend on the worker count") {
  const Census c = Census::build(5, 3);
  const auto comps = components(build_action(c, 3), c);
  const auto& p = pipeline(5);
  REQUIRE(comps.size() == p.comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    CHECK(comps[k].members == p.comps[k].members);
    CHECK(comps[k].valency == p.comps[k].valency);
  }
}
