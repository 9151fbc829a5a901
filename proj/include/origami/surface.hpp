#pragma once

// The origami value (x, y, eps), its canonical double cover and the inverse
// "restore" step that reads (y, eps) back off the double cover.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "origami/perm.hpp"

namespace origami {

// d unit squares: x glues right edges to left edges, y glues top edges to
// bottom edges, cells with eps = -1 are reflected vertically before gluing.
// Connectivity is not an invariant of this type.
struct Origami {
  Permutation x;
  Permutation y;
  SignVector eps;

  int degree() const { return x.degree(); }
  friend bool operator==(const Origami&, const Origami&) = default;
};

// Throws Error(InvalidArgument) when the three parts disagree on degree.
void validate(const Origami& o);

// "x=(1,2,3)(4); y=(1,4); eps=+--+"; the degree is the length of eps.
Origami parse_origami(std::string_view text);
std::string format_origami(const Origami& o);

// A permutation of the 2d cells ±{1..d} of a double cover. Label -i is cell i
// rotated by pi.
class CoverPermutation {
 public:
  CoverPermutation() = default;
  explicit CoverPermutation(int degree);  // identity

  int degree() const { return degree_; }
  int operator()(int label) const { return img_[slot(label)]; }
  void set(int label, int image) { img_[slot(label)] = static_cast<std::int8_t>(image); }

  CoverPermutation inverse() const;
  // Cycles in label order +1, -1, +2, -2, ...; each starts at its first such label.
  std::vector<std::vector<int>> cycles() const;
  bool is_bijective() const;

  friend bool operator==(const CoverPermutation&, const CoverPermutation&) = default;

 private:
  int slot(int label) const { return label > 0 ? label - 1 : degree_ - label - 1; }

  std::uint8_t degree_ = 0;
  std::array<std::int8_t, 2 * kMaxCells> img_{};
};

// label -> a(b(label))
CoverPermutation compose(const CoverPermutation& a, const CoverPermutation& b);
std::string format_cover_cycles(const CoverPermutation& p);

struct DoubleCover {
  CoverPermutation xhat;
  CoverPermutation yhat;
};

// xhat(i) = x^{sign i}(i), yhat(i) = eps(i) * y^{eps(i)}(i) * eps(y^{eps(i)}(i)),
// with x, y, eps extended oddly to negative labels. The deck rotation i -> -i
// conjugates both generators to their inverses.
DoubleCover double_cover(const Origami& o);
CoverPermutation cover_of_y(const Permutation& y, const SignVector& eps);
CoverPermutation cover_of_x(const Permutation& x);

// Reads (y, eps) off a y-part of a double cover. Cycles of yhat come in pairs
// c, c' = reversed negation of c; from each pair the cycle holding the smallest
// positive label is used, so eps(i) = -1 iff -i lies on that cycle.
// Throws Error(InvalidArgument) when the cycles do not pair up this way.
std::pair<Permutation, SignVector> restore(const CoverPermutation& yhat);

// Orbits of <xhat, yhat> on ±{1..d}.
std::vector<std::vector<int>> cover_orbits(const DoubleCover& cover);

// <x, y> transitive on {1..d}.
bool is_connected(const Origami& o);
bool is_connected(const Permutation& x, const Permutation& y);
// The double cover splits into two sheets. Throws Error(Disconnected) when o is
// not connected.
bool is_abelian(const Origami& o);

}  // namespace origami
