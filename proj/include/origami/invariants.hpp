#pragma once

// Stratum and genus of an origami, and the report of curve components that
// the classical Galois invariants fail to tell apart.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "origami/curves.hpp"

namespace origami {

// Orders use the quadratic-differential convention throughout: a zero of
// order m of an abelian differential is listed as 2m. Regular lattice
// vertices appear as order 0.
struct Stratum {
  bool abelian = false;
  std::vector<int> orders;  // ascending
  int genus = 0;

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

// "A3(0,8)", "Q2(-1,-1,3,3)"
std::string format_stratum(const Stratum& s);

// Vertices of the double cover are cycles of yhat xhat yhat^-1 xhat^-1 on
// lower-left corners; the half-turn sends the corner of c to that of
// yhat(xhat(-c)). A vertex of angle 2 pi L fixed by it is a cone point of
// order L - 2, a swapped pair one of order 2L - 2.
// Throws Error(Disconnected) for a disconnected origami.
Stratum stratum(const Origami& o);
int origami_genus(const Origami& o);

// Orders 2(L - 1) from the cycles of x y x^-1 y^-1. Only meaningful for
// eps = +...+.
std::vector<int> translation_orders(const Permutation& x, const Permutation& y);

struct InvariantKey {
  int degree = 0;
  bool abelian = false;
  Stratum stratum;
  std::size_t index = 0;
  Valency valency;
  int genus = 0;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

// Throws Error(Internal) if the member classes disagree on the stratum.
InvariantKey invariant_key(const CurveComponent& comp, const Census& c);

// True if the two components carry isomorphic actions of <T, S> (their Veech
// groups are conjugate).
bool same_coset_action(const CurveComponent& a, const CurveComponent& b, const ClassAction& act);

struct AmbiguousGroup {
  std::string label;  // "<degree>-<n>"
  InvariantKey key;
  std::vector<std::uint32_t> components;
  std::vector<std::uint32_t> mirror_images;  // component of the mirror image, per entry
  std::string relationship;
};

struct SummaryRow {
  bool abelian = false;
  std::size_t classes = 0;
  std::size_t components = 0;
  int genus_min = 0;
  int genus_max = 0;
  std::size_t ambiguous = 0;
};

// Published values for degrees 1..7, used to flag disagreements.
struct ReferenceRow {
  std::size_t classes;
  std::size_t components;
  int genus_min;
  int genus_max;
  std::size_t ambiguous;
};
struct Reference {
  ReferenceRow abelian;
  ReferenceRow nonabelian;
  std::size_t detail_rows_abelian;
  std::size_t detail_rows_nonabelian;
  std::optional<std::size_t> stated_cases;  // count quoted in running text, if any
};
std::optional<Reference> reference_values(int degree);

struct GaloisReport {
  int degree = 0;
  SummaryRow abelian;
  SummaryRow nonabelian;
  std::vector<AmbiguousGroup> groups;  // abelian first, then by key
  std::vector<std::string> notes;      // disagreements with the reference values
};

GaloisReport galois_report(const Census& c, const ClassAction& a, const std::vector<CurveComponent>& comps);

enum class ReportFormat { Json, Csv, Text };
std::string render_report(const GaloisReport& r, ReportFormat f);

}  // namespace origami
