#include "origami.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>

#include "origami/error.hpp"
#include "origami/info.hpp"
#include "origami/store.hpp"

struct orc_store {
  origami::Store store;
};

struct orc_census {
  origami::Census census;
};

struct orc_curves {
  int degree;
  origami::ClassAction action;
  std::vector<origami::CurveComponent> components;
};

namespace {

thread_local std::string last_error;

orc_status to_status(origami::ErrorCode c) { return static_cast<orc_status>(static_cast<int>(c)); }

template <class F>
orc_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return ORC_OK;
  } catch (const origami::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ORC_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ORC_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return ORC_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw origami::Error(origami::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

std::optional<origami::ReportFormat> format_of(orc_format f) {
  switch (f) {
    case ORC_FORMAT_JSON: return origami::ReportFormat::Json;
    case ORC_FORMAT_CSV: return origami::ReportFormat::Csv;
    case ORC_FORMAT_TEXT: return origami::ReportFormat::Text;
  }
  return std::nullopt;
}

origami::ReportFormat checked_format(orc_format f) {
  const auto r = format_of(f);
  require(r.has_value(), "unknown output format");
  return *r;
}

void check_degree(int degree, int workers) {
  require(degree >= 1, "degree must be at least 1");
  require(workers >= 1, "worker count must be at least 1");
}

std::pair<int, int> genus_range(const std::vector<origami::CurveComponent>& comps, bool abelian) {
  int lo = -1, hi = -1;
  for (const auto& c : comps) {
    if (c.abelian != abelian) continue;
    if (lo < 0 || c.genus < lo) lo = c.genus;
    if (hi < 0 || c.genus > hi) hi = c.genus;
  }
  return {lo, hi};
}

}  // namespace

extern "C" {

const char* orc_last_error(void) { return last_error.c_str(); }

const char* orc_status_name(orc_status s) {
  switch (s) {
    case ORC_OK: return "ok";
    case ORC_INVALID_ARGUMENT: return "invalid argument";
    case ORC_PARSE: return "parse error";
    case ORC_DISCONNECTED: return "disconnected origami";
    case ORC_NOT_FOUND: return "not found";
    case ORC_IO: return "i/o error";
    case ORC_CACHE_CORRUPT: return "corrupt cache";
    case ORC_RESOURCE: return "resource limit";
    case ORC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void orc_string_free(char* s) { std::free(s); }

orc_status orc_store_open(const char* dir, orc_store** out) {
  return guarded([&] {
    require(dir && out, "null argument");
    *out = new orc_store{origami::Store(dir)};
  });
}

void orc_store_close(orc_store* store) { delete store; }

orc_status orc_census_build(int degree, int workers, orc_census** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    check_degree(degree, workers);
    *out = new orc_census{origami::Census::build(degree, workers)};
  });
}

orc_status orc_census_load(orc_store* store, int degree, int workers, int force, orc_census** out, int* reused) {
  return guarded([&] {
    require(store && out, "null argument");
    check_degree(degree, workers);
    bool r = false;
    *out = new orc_census{store->store.census(degree, workers, force != 0, &r)};
    if (reused) *reused = r;
  });
}

void orc_census_free(orc_census* census) { delete census; }

orc_status orc_census_summarize(const orc_census* census, orc_census_summary* out) {
  return guarded([&] {
    require(census && out, "null argument");
    out->degree = census->census.degree();
    out->abelian_classes = census->census.count(true);
    out->nonabelian_classes = census->census.count(false);
  });
}

orc_status orc_census_find(const orc_census* census, const char* origami, uint32_t* id) {
  return guarded([&] {
    require(census && origami && id, "null argument");
    *id = census->census.find_class_any(origami::parse_origami(origami));
  });
}

orc_status orc_census_representative(const orc_census* census, uint32_t id, char** out) {
  return guarded([&] {
    require(census && out, "null argument");
    if (id >= census->census.size())
      throw origami::Error(origami::ErrorCode::NotFound, "no class " + std::to_string(id));
    *out = dup(origami::format_origami(census->census.at(id).representative()));
  });
}

orc_status orc_curves_build(const orc_census* census, int workers, orc_curves** out) {
  return guarded([&] {
    require(census && out, "null argument");
    check_degree(census->census.degree(), workers);
    auto a = origami::build_action(census->census, workers);
    auto comps = origami::components(a, census->census);
    *out = new orc_curves{census->census.degree(), std::move(a), std::move(comps)};
  });
}

orc_status orc_curves_load(orc_store* store, const orc_census* census, int workers, int force, orc_curves** out,
                           int* reused) {
  return guarded([&] {
    require(store && census && out, "null argument");
    check_degree(census->census.degree(), workers);
    bool ra = false, rc = false;
    auto a = store->store.action(census->census, workers, force != 0, &ra);
    auto comps = store->store.components(census->census, a, force != 0, &rc);
    *out = new orc_curves{census->census.degree(), std::move(a), std::move(comps)};
    if (reused) *reused = ra && rc;
  });
}

void orc_curves_free(orc_curves* curves) { delete curves; }

orc_status orc_curves_summarize(const orc_curves* curves, orc_curves_summary* out) {
  return guarded([&] {
    require(curves && out, "null argument");
    out->degree = curves->degree;
    out->abelian_components = out->nonabelian_components = 0;
    for (const auto& c : curves->components) ++(c.abelian ? out->abelian_components : out->nonabelian_components);
    std::tie(out->abelian_genus_min, out->abelian_genus_max) = genus_range(curves->components, true);
    std::tie(out->nonabelian_genus_min, out->nonabelian_genus_max) = genus_range(curves->components, false);
  });
}

orc_status orc_curves_component_count(const orc_curves* curves, size_t* out) {
  return guarded([&] {
    require(curves && out, "null argument");
    *out = curves->components.size();
  });
}

orc_status orc_report(const orc_census* census, const orc_curves* curves, orc_format format, char** out) {
  return guarded([&] {
    require(census && curves && out, "null argument");
    require(census->census.degree() == curves->degree, "census and curves differ in degree");
    const auto f = checked_format(format);
    const auto r = origami::galois_report(census->census, curves->action, curves->components);
    *out = dup(origami::render_report(r, f));
  });
}

orc_status orc_origami_check(const char* origami_text, int* degree, int* connected) {
  return guarded([&] {
    require(origami_text && degree && connected, "null argument");
    const auto o = origami::parse_origami(origami_text);
    *degree = o.degree();
    *connected = origami::is_connected(o) ? 1 : 0;
  });
}

orc_status orc_info(const char* origami_text, const orc_census* census, const orc_curves* curves, orc_format format,
                    char** out) {
  return guarded([&] {
    require(origami_text && out, "null argument");
    const auto f = checked_format(format);
    require(f != origami::ReportFormat::Csv, "info supports json and text only");
    const auto o = origami::parse_origami(origami_text);
    if (census) require(census->census.degree() == o.degree(), "census degree differs from the origami");
    if (curves) require(census && curves->degree == o.degree(), "curves need the census of the same degree");
    const auto info = origami::origami_info(o, census ? &census->census : nullptr,
                                            curves ? &curves->action : nullptr,
                                            curves ? &curves->components : nullptr);
    *out = dup(origami::render_info(info, f));
  });
}

orc_status orc_diagram(const orc_curves* curves, uint32_t component, char** out) {
  return guarded([&] {
    require(curves && out, "null argument");
    if (component >= curves->components.size())
      throw origami::Error(origami::ErrorCode::NotFound, "no component " + std::to_string(component) + " at degree " +
                                                             std::to_string(curves->degree));
    *out = dup(origami::export_diagram(curves->components[component], curves->action));
  });
}

orc_status orc_store_write_report(orc_store* store, int degree, orc_format format, const char* text, char** path) {
  return guarded([&] {
    require(store && text && path, "null argument");
    const auto p = store->store.report_path(degree, checked_format(format));
    store->store.write_file(p, text);
    *path = dup(p.string());
  });
}

orc_status orc_store_write_diagram(orc_store* store, int degree, uint32_t component, const char* text, char** path) {
  return guarded([&] {
    require(store && text && path, "null argument");
    const auto p = store->store.diagram_path(degree, component);
    store->store.write_file(p, text);
    *path = dup(p.string());
  });
}

}  // extern "C"
