#include "origami/info.hpp"

#include <sstream>

#include "json.hpp"

namespace origami {

OrigamiInfo origami_info(const Origami& o, const Census* c, const ClassAction* a,
                         const std::vector<CurveComponent>* comps) {
  validate(o);
  OrigamiInfo info;
  info.origami = o;
  info.connected = is_connected(o);
  if (!info.connected) return info;
  info.abelian = is_abelian(o);
  info.stratum = stratum(o);
  if (!c) return info;
  const std::uint32_t id = c->find_class_any(o);
  info.class_id = id;
  info.representative = c->at(id).representative();
  if (!a || !comps) return info;
  for (const auto& comp : *comps) {
    if (!std::binary_search(comp.members.begin(), comp.members.end(), id)) continue;
    info.component = comp.id;
    info.index = comp.index();
    info.valency = comp.valency;
    info.curve_genus = comp.genus;
    info.veech_generators = veech_data(comp, id, *a).generators;
    break;
  }
  return info;
}

std::string render_info(const OrigamiInfo& info, ReportFormat f) {
  std::vector<std::string> words;
  for (const auto& w : info.veech_generators) words.push_back(format_word(w));
  if (f == ReportFormat::Json) {
    nlohmann::json j;
    j["origami"] = format_origami(info.origami);
    j["degree"] = info.origami.degree();
    j["connected"] = info.connected;
    if (info.connected) {
      j["abelian"] = info.abelian;
      j["stratum"] = format_stratum(info.stratum);
      j["genus"] = info.stratum.genus;
    }
    if (info.class_id) {
      j["class"] = *info.class_id;
      j["representative"] = format_origami(*info.representative);
    }
    if (info.component) {
      j["component"] = *info.component;
      j["index"] = info.index;
      j["valency"] = format_valency(info.valency);
      j["curve_genus"] = info.curve_genus;
      j["veech_generators"] = words;
      j["full_veech_group"] = info.index == 1;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  auto row = [&](std::string_view k, const std::string& v) {
    out << k << std::string(16 - k.size(), ' ') << v << '\n';
  };
  row("origami", format_origami(info.origami));
  row("degree", std::to_string(info.origami.degree()));
  row("connected", info.connected ? "yes" : "no");
  if (!info.connected) return out.str();
  row("abelian", info.abelian ? "yes" : "no");
  row("stratum", format_stratum(info.stratum));
  row("genus", std::to_string(info.stratum.genus));
  if (info.class_id) {
    row("class", std::to_string(*info.class_id));
    row("representative", format_origami(*info.representative));
  }
  if (info.component) {
    row("component", std::to_string(*info.component));
    row("index", std::to_string(info.index) + (info.index == 1 ? " (full Veech group)" : ""));
    row("valency", format_valency(info.valency));
    row("curve genus", std::to_string(info.curve_genus));
    std::string gens;
    for (const auto& w : words) gens += (gens.empty() ? "" : ", ") + w;
    row("veech group", "<" + gens + ">");
  }
  return out.str();
}

}  // namespace origami
