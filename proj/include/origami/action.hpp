#pragma once

// The generators T = [[1,1],[0,1]] and S = [[0,-1],[1,0]] of the modular
// group, and the horizontal mirror, acting on origamis and on census classes.

#include <cstdint>
#include <vector>

#include "origami/classifier.hpp"
#include "origami/surface.hpp"

namespace origami {

// Shear by T. x is unchanged, so a canonical x stays canonical.
Origami act_T(const Origami& o);
// Rotation by S, relabelled so that x is canonical.
Origami act_S(const Origami& o);
// Horizontal flip of every cell (xhat -> xhat^-1 on the double cover), with x
// made canonical.
Origami mirror(const Origami& o);

struct ClassAction {
  int degree = 0;
  std::vector<std::uint32_t> phi_T;
  std::vector<std::uint32_t> phi_S;
  std::vector<std::uint32_t> mirror;

  std::size_t size() const { return phi_T.size(); }
};

std::uint32_t act_T(const Census& c, std::uint32_t id);
std::uint32_t act_S(const Census& c, std::uint32_t id);
std::uint32_t mirror(const Census& c, std::uint32_t id);

// Tables for every class, filled in parallel over class ids.
ClassAction build_action(const Census& c, int workers = 1);

// Throws Error(CacheCorrupt) unless all three tables are permutations of the
// ids of a census with `classes` entries.
void validate_action(const ClassAction& a, std::size_t classes);

}  // namespace origami
