#include "origami/curves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

namespace {

// Cycle lengths of `step` on `members`; `local` maps class id -> slot.
template <class Step>
std::vector<int> cycle_lengths(const std::vector<std::uint32_t>& members, const std::map<std::uint32_t, std::size_t>& local,
                               Step&& step) {
  std::vector<bool> seen(members.size(), false);
  std::vector<int> out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (std::uint32_t id = members[k];;) {
      const auto it = local.find(id);
      if (it == local.end()) throw Error(ErrorCode::Internal, "component is not closed under the action");
      if (seen[it->second]) break;
      seen[it->second] = true;
      ++len;
      id = step(id);
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

int Valency::cycle_count() const { return static_cast<int>(order3.size() + order2.size() + cusps.size()); }

std::string format_multiset(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size();) {
    std::size_t j = k;
    while (j < v.size() && v[j] == v[k]) ++j;
    if (!s.empty()) s += ',';
    s += std::to_string(v[k]);
    if (j - k > 1) s += '^' + std::to_string(j - k);
    k = j;
  }
  return s;
}

std::string format_valency(const Valency& v) {
  return "(" + format_multiset(v.order3) + "|" + format_multiset(v.order2) + "|" + format_multiset(v.cusps) + ")";
}

Valency valency_list(const std::vector<std::uint32_t>& members, const ClassAction& a) {
  std::map<std::uint32_t, std::size_t> local;
  for (std::size_t k = 0; k < members.size(); ++k) local[members[k]] = k;
  Valency v;
  v.order3 = cycle_lengths(members, local, [&](std::uint32_t i) { return a.phi_S[a.phi_T[i]]; });
  v.order2 = cycle_lengths(members, local, [&](std::uint32_t i) { return a.phi_S[i]; });
  v.cusps = cycle_lengths(members, local, [&](std::uint32_t i) { return a.phi_T[i]; });
  for (int len : v.order3)
    if (len != 1 && len != 3) throw Error(ErrorCode::Internal, "phi_S o phi_T does not have order 3");
  for (int len : v.order2)
    if (len != 1 && len != 2) throw Error(ErrorCode::Internal, "phi_S is not an involution");
  return v;
}

int curve_genus(std::size_t index, const Valency& v) {
  const long diff = static_cast<long>(index) - v.cycle_count();
  if (diff % 2 != 0) throw Error(ErrorCode::Internal, "curve genus is not an integer");
  const long g = 1 + diff / 2;
  if (g < 0) throw Error(ErrorCode::Internal, "curve genus is negative");
  return static_cast<int>(g);
}

std::vector<CurveComponent> components(const ClassAction& a, const Census& c) {
  const std::size_t n = a.size();
  if (c.size() != n) throw Error(ErrorCode::InvalidArgument, "action tables and census differ in size");
  std::vector<CurveComponent> out;
  std::vector<bool> seen(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    CurveComponent comp;
    comp.id = static_cast<std::uint32_t>(out.size());
    std::vector<std::uint32_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      comp.members.push_back(i);
      for (std::uint32_t j : {a.phi_T[i], a.phi_S[i]}) {
        if (!seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.members.begin(), comp.members.end());
    comp.abelian = c.at(start).abelian;
    comp.valency = valency_list(comp.members, a);
    comp.genus = curve_genus(comp.index(), comp.valency);
    out.push_back(std::move(comp));
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Gen g : w) {
    if (!s.empty()) s += '*';
    switch (g) {
      case Gen::T: s += "T"; break;
      case Gen::S: s += "S"; break;
      case Gen::Tinv: s += "T^-1"; break;
      case Gen::Sinv: s += "S^-1"; break;
    }
  }
  return s;
}

namespace {

Gen invert(Gen g) {
  switch (g) {
    case Gen::T: return Gen::Tinv;
    case Gen::S: return Gen::Sinv;
    case Gen::Tinv: return Gen::T;
    case Gen::Sinv: return Gen::S;
  }
  return g;
}

}  // namespace

Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(invert(*it));
  return r;
}

Word free_reduce(Word w) {
  Word r;
  for (Gen g : w) {
    if (!r.empty() && r.back() == invert(g))
      r.pop_back();
    else
      r.push_back(g);
  }
  return r;
}

std::uint32_t apply_word(const ClassAction& a, std::uint32_t id, const Word& w) {
  for (Gen g : w) {
    switch (g) {
      case Gen::T: id = a.phi_T[id]; break;
      case Gen::S: id = a.phi_S[id]; break;
      case Gen::Tinv:
        id = static_cast<std::uint32_t>(std::find(a.phi_T.begin(), a.phi_T.end(), id) - a.phi_T.begin());
        break;
      case Gen::Sinv:
        id = static_cast<std::uint32_t>(std::find(a.phi_S.begin(), a.phi_S.end(), id) - a.phi_S.begin());
        break;
    }
  }
  return id;
}

VeechData veech_data(const CurveComponent& comp, const ClassAction& a) { return veech_data(comp, comp.base(), a); }

VeechData veech_data(const CurveComponent& comp, std::uint32_t base, const ClassAction& a) {
  if (!std::binary_search(comp.members.begin(), comp.members.end(), base))
    throw Error(ErrorCode::InvalidArgument, "base class is not in the component");
  VeechData v;
  v.base = base;
  std::map<std::uint32_t, std::size_t> slot;
  std::deque<std::uint32_t> queue{base};
  slot[base] = 0;
  v.cosets.push_back(base);
  v.representatives.push_back({});
  std::vector<std::pair<std::size_t, Gen>> parent{{0, Gen::T}};
  std::vector<std::pair<std::size_t, Gen>> all_edges;
  while (!queue.empty()) {
    const auto id = queue.front();
    queue.pop_front();
    const std::size_t k = slot.at(id);
    for (Gen g : {Gen::T, Gen::S}) {
      const std::uint32_t to = g == Gen::T ? a.phi_T[id] : a.phi_S[id];
      all_edges.push_back({k, g});
      if (slot.count(to)) continue;
      slot[to] = v.cosets.size();
      v.cosets.push_back(to);
      Word w = v.representatives[k];
      w.push_back(g);
      v.representatives.push_back(std::move(w));
      parent.emplace_back(k, g);
      queue.push_back(to);
    }
  }
  if (v.cosets.size() != comp.index())
    throw Error(ErrorCode::Internal, "component is not a single orbit of the action");
  for (const auto& [k, g] : all_edges) {
    const std::uint32_t to = g == Gen::T ? a.phi_T[v.cosets[k]] : a.phi_S[v.cosets[k]];
    const std::size_t target = slot.at(to);
    if (target != 0 && parent[target] == std::pair{k, g}) continue;
    ++v.schreier_count;
    Word w = v.representatives[k];
    w.push_back(g);
    const Word back = inverse(v.representatives[target]);
    w.insert(w.end(), back.begin(), back.end());
    w = free_reduce(std::move(w));
    if (!w.empty()) v.generators.push_back(std::move(w));
  }
  return v;
}

std::string export_diagram(const CurveComponent& comp, const ClassAction& a) {
  std::ostringstream out;
  const auto v = veech_data(comp, a);

  // Cusp k is the T-cycle through the k-th smallest unvisited member.
  std::map<std::uint32_t, std::pair<int, int>> cusp_of;  // id -> (cusp, width)
  int cusps = 0;
  for (std::uint32_t id : comp.members) {
    if (cusp_of.count(id)) continue;
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t j = id; !cusp_of.count(j); j = a.phi_T[j]) {
      cusp_of[j] = {cusps, 0};
      cyc.push_back(j);
    }
    for (std::uint32_t j : cyc) cusp_of[j].second = static_cast<int>(cyc.size());
    ++cusps;
  }

  out << "digraph component_" << comp.id << " {\n";
  out << "  graph [index=" << comp.index() << ", genus=" << comp.genus << ", abelian=" << (comp.abelian ? 1 : 0)
      << ", valency=\"" << format_valency(comp.valency) << "\"];\n";
  out << "  node [shape=triangle];\n";
  for (std::size_t k = 0; k < v.cosets.size(); ++k) {
    const auto id = v.cosets[k];
    const auto [cusp, width] = cusp_of.at(id);
    out << "  c" << id << " [label=\"" << id << "\", word=\"" << format_word(v.representatives[k])
        << "\", cusp=" << cusp << ", cusp_width=" << width;
    if (a.phi_S[id] == id) out << ", cone2=1";
    if (a.phi_S[a.phi_T[id]] == id) out << ", cone3=1";
    out << "];\n";
  }
  for (std::uint32_t id : comp.members) out << "  c" << id << " -> c" << a.phi_T[id] << " [label=T];\n";
  for (std::uint32_t id : comp.members) {
    const auto to = a.phi_S[id];
    if (to >= id) out << "  c" << id << " -> c" << to << " [label=S, dir=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace origami
