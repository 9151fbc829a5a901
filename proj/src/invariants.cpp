#include "origami/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "origami/error.hpp"

namespace origami {

std::string format_stratum(const Stratum& s) {
  std::string out = (s.abelian ? "A" : "Q") + std::to_string(s.genus) + "(";
  for (std::size_t k = 0; k < s.orders.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s.orders[k]);
  }
  return out + ")";
}

Stratum stratum(const Origami& o) {
  const bool abelian = is_abelian(o);  // throws for disconnected input
  const DoubleCover cover = double_cover(o);
  const CoverPermutation xinv = cover.xhat.inverse(), yinv = cover.yhat.inverse();
  const CoverPermutation around = compose(cover.yhat, compose(cover.xhat, compose(yinv, xinv)));
  const auto vertices = around.cycles();

  std::map<int, std::size_t> vertex_of;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (int c : vertices[v]) vertex_of[c] = v;

  Stratum s;
  s.abelian = abelian;
  std::vector<bool> done(vertices.size(), false);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (done[v]) continue;
    const int c = vertices[v].front();
    const std::size_t w = vertex_of.at(cover.yhat(cover.xhat(-c)));
    const int len = static_cast<int>(vertices[v].size());
    if (vertices[w].size() != vertices[v].size())
      throw Error(ErrorCode::Internal, "half-turn pairs vertices of different angles");
    done[v] = done[w] = true;
    s.orders.push_back(w == v ? len - 2 : 2 * len - 2);
  }
  std::sort(s.orders.begin(), s.orders.end());
  int total = 0;
  for (int k : s.orders) total += k;
  if (total % 4 != 0) throw Error(ErrorCode::Internal, "cone orders do not sum to 4g - 4");
  s.genus = 1 + total / 4;
  return s;
}

int origami_genus(const Origami& o) { return stratum(o).genus; }

std::vector<int> translation_orders(const Permutation& x, const Permutation& y) {
  const Permutation z = compose(x, compose(y, compose(x.inverse(), y.inverse())));
  std::vector<int> out;
  for (int len : z.cycle_type()) out.push_back(2 * (len - 1));
  std::sort(out.begin(), out.end());
  return out;
}

InvariantKey invariant_key(const CurveComponent& comp, const Census& c) {
  InvariantKey k;
  k.degree = c.degree();
  k.abelian = comp.abelian;
  k.stratum = stratum(c.at(comp.base()).representative());
  for (auto id : comp.members)
    if (stratum(c.at(id).representative()) != k.stratum)
      throw Error(ErrorCode::Internal, "stratum is not constant on component " + std::to_string(comp.id));
  k.index = comp.index();
  k.valency = comp.valency;
  k.genus = comp.genus;
  return k;
}

bool same_coset_action(const CurveComponent& a, const CurveComponent& b, const ClassAction& act) {
  if (a.index() != b.index() || a.valency != b.valency) return false;
  for (auto target : b.members) {
    std::map<std::uint32_t, std::uint32_t> f{{a.base(), target}};
    std::vector<std::uint32_t> queue{a.base()};
    std::map<std::uint32_t, std::uint32_t> used{{target, a.base()}};
    bool ok = true;
    for (std::size_t q = 0; ok && q < queue.size(); ++q) {
      const auto u = queue[q];
      for (int g = 0; g < 2 && ok; ++g) {
        const auto from = g == 0 ? act.phi_T[u] : act.phi_S[u];
        const auto to = g == 0 ? act.phi_T[f[u]] : act.phi_S[f[u]];
        const auto it = f.find(from);
        if (it != f.end()) {
          ok = it->second == to;
        } else if (used.count(to)) {
          ok = false;
        } else {
          f[from] = to;
          used[to] = from;
          queue.push_back(from);
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

std::string count_word(std::size_t n) {
  static const char* words[] = {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};
  return n < 10 ? words[n] : std::to_string(n);
}

std::string relationship(const std::vector<std::uint32_t>& ids, const std::vector<std::uint32_t>& images,
                         const std::vector<CurveComponent>& comps, const ClassAction& a) {
  std::vector<std::uint32_t> closed;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> other;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto id = ids[k], image = images[k];
    if (image == id) {
      closed.push_back(id);
    } else if (std::find(ids.begin(), ids.end(), image) != ids.end()) {
      if (id < image) pairs.emplace_back(id, image);
    } else {
      other.push_back("component " + std::to_string(id) + " mirrors to " + std::to_string(image) +
                      " outside the group");
    }
  }
  std::vector<std::string> parts;
  std::size_t symmetric = 0, conjugate = 0;
  for (const auto& [p, q] : pairs) (same_coset_action(comps[p], comps[q], a) ? symmetric : conjugate)++;
  if (symmetric)
    parts.push_back(count_word(symmetric) + (symmetric == 1 ? " pair" : " pairs") +
                    " of mirror-symmetric curves, mirroring each other");
  if (conjugate) parts.push_back(count_word(conjugate) + " mirror-conjugate " + (conjugate == 1 ? "pair" : "pairs"));
  if (!closed.empty()) {
    if (closed.size() == 1) {
      parts.push_back("one mirror-closed curve");
    } else {
      bool all_same = true, all_distinct = true;
      for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
          const bool same = same_coset_action(comps[closed[i]], comps[closed[j]], a);
          all_same = all_same && same;
          all_distinct = all_distinct && !same;
        }
      const std::string kind = all_same ? "identical" : all_distinct ? "distinct" : "partly identical";
      parts.push_back(count_word(closed.size()) + " " + kind + ", mirror-closed curves");
    }
  }
  parts.insert(parts.end(), other.begin(), other.end());
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " & " : "") + parts[k];
  return s;
}

}  // namespace

std::optional<Reference> reference_values(int degree) {
  switch (degree) {
    case 1: return Reference{{1, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, 0, 0, std::nullopt};
    case 2: return Reference{{2, 1, 0, 0, 0}, {1, 1, 0, 0, 0}, 0, 0, std::nullopt};
    case 3: return Reference{{7, 2, 0, 0, 0}, {4, 1, 0, 0, 0}, 0, 0, std::nullopt};
    case 4: return Reference{{26, 5, 0, 0, 0}, {34, 6, 0, 0, 0}, 0, 0, std::nullopt};
    case 5: return Reference{{91, 8, 0, 0, 0}, {227, 13, 0, 0, 0}, 0, 0, std::nullopt};
    case 6: return Reference{{490, 28, 0, 0, 1}, {2316, 88, 0, 0, 13}, 1, 12, 13};
    case 7: return Reference{{2773, 41, 0, 1, 5}, {26586, 88, 0, 11, 3}, 5, 3, 9};
    default: return std::nullopt;
  }
}

GaloisReport galois_report(const Census& c, const ClassAction& a, const std::vector<CurveComponent>& comps) {
  GaloisReport r;
  r.degree = c.degree();
  std::vector<std::uint32_t> comp_of(c.size());
  for (const auto& comp : comps)
    for (auto id : comp.members) comp_of[id] = comp.id;

  std::map<InvariantKey, std::vector<std::uint32_t>> by_key;
  for (const auto& comp : comps) by_key[invariant_key(comp, c)].push_back(comp.id);

  r.abelian.abelian = true;
  for (SummaryRow* row : {&r.abelian, &r.nonabelian}) {
    bool first = true;
    for (const auto& comp : comps) {
      if (comp.abelian != row->abelian) continue;
      ++row->components;
      row->genus_min = first ? comp.genus : std::min(row->genus_min, comp.genus);
      row->genus_max = first ? comp.genus : std::max(row->genus_max, comp.genus);
      first = false;
    }
    row->classes = c.count(row->abelian);
  }

  std::vector<std::pair<InvariantKey, std::vector<std::uint32_t>>> shared;
  for (auto& [key, ids] : by_key)
    if (ids.size() >= 2) shared.emplace_back(key, ids);
  std::stable_sort(shared.begin(), shared.end(), [](const auto& p, const auto& q) {
    if (p.first.abelian != q.first.abelian) return p.first.abelian;
    if (p.first.index != q.first.index) return p.first.index < q.first.index;
    return p.first < q.first;
  });
  for (auto& [key, ids] : shared) {
    AmbiguousGroup g;
    g.label = std::to_string(r.degree) + "-" + std::to_string(r.groups.size() + 1);
    g.key = key;
    g.components = ids;
    for (auto id : ids) g.mirror_images.push_back(comp_of[a.mirror[comps[id].base()]]);
    g.relationship = relationship(g.components, g.mirror_images, comps, a);
    (key.abelian ? r.abelian : r.nonabelian).ambiguous++;
    r.groups.push_back(std::move(g));
  }

  if (const auto ref = reference_values(r.degree)) {
    auto compare = [&](const char* side, const SummaryRow& got, const ReferenceRow& want) {
      auto check = [&](const char* what, long g, long w) {
        if (g != w)
          r.notes.push_back(std::string(side) + " " + what + ": computed " + std::to_string(g) + ", reference " +
                            std::to_string(w));
      };
      check("classes", static_cast<long>(got.classes), static_cast<long>(want.classes));
      check("components", static_cast<long>(got.components), static_cast<long>(want.components));
      if (got.components) {
        check("minimum curve genus", got.genus_min, want.genus_min);
        check("maximum curve genus", got.genus_max, want.genus_max);
      }
      check("ambiguous keys", static_cast<long>(got.ambiguous), static_cast<long>(want.ambiguous));
    };
    compare("abelian", r.abelian, ref->abelian);
    compare("non-abelian", r.nonabelian, ref->nonabelian);
    if (ref->nonabelian.ambiguous != ref->detail_rows_nonabelian)
      r.notes.push_back("reference summary lists " + std::to_string(ref->nonabelian.ambiguous) +
                        " non-abelian ambiguous keys but its detail table has " +
                        std::to_string(ref->detail_rows_nonabelian) + " non-abelian rows");
    if (ref->abelian.ambiguous != ref->detail_rows_abelian)
      r.notes.push_back("reference summary lists " + std::to_string(ref->abelian.ambiguous) +
                        " abelian ambiguous keys but its detail table has " +
                        std::to_string(ref->detail_rows_abelian) + " abelian rows");
    const std::size_t rows = ref->detail_rows_abelian + ref->detail_rows_nonabelian;
    if (ref->stated_cases && *ref->stated_cases != rows)
      r.notes.push_back("reference text counts " + std::to_string(*ref->stated_cases) +
                        " exceptional cases but its detail table has " + std::to_string(rows) + " rows");
  }
  return r;
}

namespace {

std::string genus_range(const SummaryRow& s) {
  if (!s.components) return "-";
  return s.genus_min == s.genus_max ? std::to_string(s.genus_min)
                                    : std::to_string(s.genus_min) + ".." + std::to_string(s.genus_max);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string id_list(const std::vector<std::uint32_t>& ids, char sep) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(ids[k]);
  return s;
}

nlohmann::json summary_json(const SummaryRow& s) {
  return {{"classes", s.classes},
          {"components", s.components},
          {"genus_min", s.genus_min},
          {"genus_max", s.genus_max},
          {"ambiguous_keys", s.ambiguous}};
}

}  // namespace

std::string render_report(const GaloisReport& r, ReportFormat f) {
  std::ostringstream out;
  switch (f) {
    case ReportFormat::Json: {
      nlohmann::json j;
      j["degree"] = r.degree;
      j["summary"] = {{"abelian", summary_json(r.abelian)}, {"non_abelian", summary_json(r.nonabelian)}};
      j["groups"] = nlohmann::json::array();
      for (const auto& g : r.groups) {
        j["groups"].push_back({{"no", g.label},
                               {"abelian", g.key.abelian},
                               {"stratum", format_stratum(g.key.stratum)},
                               {"surface_genus", g.key.stratum.genus},
                               {"index", g.key.index},
                               {"valency", format_valency(g.key.valency)},
                               {"curve_genus", g.key.genus},
                               {"components", g.components},
                               {"mirror_images", g.mirror_images},
                               {"relationship", g.relationship}});
      }
      j["notes"] = r.notes;
      out << j.dump(2) << '\n';
      break;
    }
    case ReportFormat::Csv:
      out << "no,stratum,index,valency,curve_genus,components,relationship\n";
      for (const auto& g : r.groups)
        out << g.label << ',' << csv_field(format_stratum(g.key.stratum)) << ',' << g.key.index << ','
            << csv_field(format_valency(g.key.valency)) << ',' << g.key.genus << ','
            << csv_field(id_list(g.components, ' ')) << ',' << csv_field(g.relationship) << '\n';
      break;
    case ReportFormat::Text:
      out << "degree " << r.degree << "\n";
      for (const SummaryRow* s : {&r.abelian, &r.nonabelian})
        out << (s->abelian ? "  abelian     " : "  non-abelian ") << "classes=" << s->classes
            << " components=" << s->components << " genus=" << genus_range(*s) << " ambiguous=" << s->ambiguous
            << '\n';
      if (r.groups.empty()) out << "no components share all invariants\n";
      for (const auto& g : r.groups)
        out << g.label << "  " << format_stratum(g.key.stratum) << "  index " << g.key.index << "  "
            << format_valency(g.key.valency) << "  genus " << g.key.genus << "  components "
            << id_list(g.components, ',') << "  " << g.relationship << '\n';
      for (const auto& n : r.notes) out << "note: " << n << '\n';
      break;
  }
  return out.str();
}

}  // namespace origami
