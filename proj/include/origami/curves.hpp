#pragma once

// Teichmüller curve components: orbits of the class action, their valency
// lists, genus, Veech group data and a graph export of the coset diagram.

#include <cstdint>
#include <string>
#include <vector>

#include "origami/action.hpp"

namespace origami {

struct Valency {
  std::vector<int> order3;  // cycles of phi_S ∘ phi_T
  std::vector<int> order2;  // cycles of phi_S
  std::vector<int> cusps;   // cycles of phi_T

  int cycle_count() const;
  friend bool operator==(const Valency&, const Valency&) = default;
  friend auto operator<=>(const Valency&, const Valency&) = default;
};

// "(3^5|2^7,1|5,4,3^2)"
std::string format_valency(const Valency& v);
// "5,4,3^2"
std::string format_multiset(const std::vector<int>& descending);

struct CurveComponent {
  std::uint32_t id = 0;
  std::vector<std::uint32_t> members;  // ascending class ids
  bool abelian = false;
  Valency valency;
  int genus = 0;

  std::size_t index() const { return members.size(); }
  std::uint32_t base() const { return members.front(); }
  const std::vector<int>& cusp_widths() const { return valency.cusps; }
};

// Cycle types of the three permutations restricted to `members`, each sorted
// in descending order. Throws Error(Internal) if phi_S is not an involution or
// phi_S ∘ phi_T does not have order 3 on the component.
Valency valency_list(const std::vector<std::uint32_t>& members, const ClassAction& a);

// 1 + (index - cycles) / 2. Throws Error(Internal) for an odd difference or a
// negative result.
int curve_genus(std::size_t index, const Valency& v);

// Orbits of <phi_T, phi_S>, ordered by smallest member.
std::vector<CurveComponent> components(const ClassAction& a, const Census& c);

enum class Gen : std::uint8_t { T, S, Tinv, Sinv };
using Word = std::vector<Gen>;

// "T*S*T^-1"; the empty word is "1".
std::string format_word(const Word& w);
Word inverse(const Word& w);
Word free_reduce(Word w);
// Applies the letters left to right: id . g1 . g2 ...
std::uint32_t apply_word(const ClassAction& a, std::uint32_t id, const Word& w);

struct VeechData {
  std::uint32_t base = 0;
  std::vector<std::uint32_t> cosets;  // class reached by each representative
  std::vector<Word> representatives;  // breadth-first tree, T before S
  std::vector<Word> generators;       // non-trivial Schreier generators, free-reduced
  std::size_t schreier_count = 0;     // before pruning: index + 1
};

VeechData veech_data(const CurveComponent& comp, const ClassAction& a);
VeechData veech_data(const CurveComponent& comp, std::uint32_t base, const ClassAction& a);

// Graphviz description: one node per coset (copy of the fundamental
// triangle), "T" edges c -> phi_T(c), undirected "S" edges, cusp and cone
// point annotations.
std::string export_diagram(const CurveComponent& comp, const ClassAction& a);

}  // namespace origami
