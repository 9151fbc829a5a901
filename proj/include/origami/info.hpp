#pragma once

// Single-origami inspection.

#include <optional>
#include <string>
#include <vector>

#include "origami/invariants.hpp"

namespace origami {

struct OrigamiInfo {
  Origami origami;
  bool connected = false;
  bool abelian = false;
  Stratum stratum;
  std::optional<std::uint32_t> class_id;
  std::optional<Origami> representative;
  std::optional<std::uint32_t> component;
  std::size_t index = 0;
  Valency valency;
  int curve_genus = 0;
  std::vector<Word> veech_generators;  // Schreier generators based at the class of `origami`
};

// `c`, `a` and `comps` may be null; the class and curve fields are then left
// empty. A disconnected origami only gets `connected = false`.
OrigamiInfo origami_info(const Origami& o, const Census* c, const ClassAction* a,
                         const std::vector<CurveComponent>* comps);

// Json or Text.
std::string render_info(const OrigamiInfo& info, ReportFormat f);

}  // namespace origami
