#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "origami.h"

namespace {

constexpr int kUsageError = 64;

struct Config {
  int degree = 0;
  int workers = 1;
  std::string cache;
  std::string format = "text";
  bool force = false;
  int verbose = 0;
};

struct Failure {
  orc_status status;
};

void check(orc_status s) {
  if (s != ORC_OK) throw Failure{s};
}

struct Owned {
  char* p = nullptr;
  ~Owned() { orc_string_free(p); }
};

std::string cache_dir(const Config& cfg) {
  if (!cfg.cache.empty()) return cfg.cache;
  if (const char* env = std::getenv("ORIGAMI_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::string(xdg) + "/origami";
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/origami";
  return ".origami-cache";
}

orc_format format_of(const std::string& f) {
  if (f == "json") return ORC_FORMAT_JSON;
  if (f == "csv") return ORC_FORMAT_CSV;
  return ORC_FORMAT_TEXT;
}

using StorePtr = std::unique_ptr<orc_store, decltype(&orc_store_close)>;
using CensusPtr = std::unique_ptr<orc_census, decltype(&orc_census_free)>;
using CurvesPtr = std::unique_ptr<orc_curves, decltype(&orc_curves_free)>;

StorePtr open_store(const Config& cfg) {
  orc_store* s = nullptr;
  check(orc_store_open(cache_dir(cfg).c_str(), &s));
  return StorePtr(s, orc_store_close);
}

CensusPtr load_census(orc_store* store, const Config& cfg, int degree) {
  orc_census* c = nullptr;
  int reused = 0;
  check(orc_census_load(store, degree, cfg.workers, cfg.force, &c, &reused));
  if (cfg.verbose) std::fprintf(stderr, "census d=%d %s\n", degree, reused ? "loaded from cache" : "computed");
  return CensusPtr(c, orc_census_free);
}

CurvesPtr load_curves(orc_store* store, const orc_census* census, const Config& cfg) {
  orc_curves* c = nullptr;
  int reused = 0;
  check(orc_curves_load(store, census, cfg.workers, cfg.force, &c, &reused));
  if (cfg.verbose) std::fprintf(stderr, "curves %s\n", reused ? "loaded from cache" : "computed");
  return CurvesPtr(c, orc_curves_free);
}

std::string range(int lo, int hi) {
  if (lo < 0) return "-";
  return std::to_string(lo) + ".." + std::to_string(hi);
}

void cmd_census(const Config& cfg) {
  auto store = open_store(cfg);
  auto census = load_census(store.get(), cfg, cfg.degree);
  orc_census_summary s{};
  check(orc_census_summarize(census.get(), &s));
  std::printf("abelian=%zu non-abelian=%zu\n", s.abelian_classes, s.nonabelian_classes);
}

void cmd_curves(const Config& cfg) {
  auto store = open_store(cfg);
  auto census = load_census(store.get(), cfg, cfg.degree);
  auto curves = load_curves(store.get(), census.get(), cfg);
  orc_curves_summary s{};
  check(orc_curves_summarize(curves.get(), &s));
  int lo = s.abelian_genus_min, hi = s.abelian_genus_max;
  if (s.nonabelian_genus_min >= 0) {
    lo = lo < 0 ? s.nonabelian_genus_min : std::min(lo, s.nonabelian_genus_min);
    hi = std::max(hi, s.nonabelian_genus_max);
  }
  std::printf("abelian components=%zu non-abelian=%zu genus=%s\n", s.abelian_components, s.nonabelian_components,
              range(lo, hi).c_str());
  std::printf("genus abelian=%s non-abelian=%s\n", range(s.abelian_genus_min, s.abelian_genus_max).c_str(),
              range(s.nonabelian_genus_min, s.nonabelian_genus_max).c_str());
}

void cmd_report(const Config& cfg) {
  auto store = open_store(cfg);
  auto census = load_census(store.get(), cfg, cfg.degree);
  auto curves = load_curves(store.get(), census.get(), cfg);
  Owned text, path;
  check(orc_report(census.get(), curves.get(), format_of(cfg.format), &text.p));
  check(orc_store_write_report(store.get(), cfg.degree, format_of(cfg.format), text.p, &path.p));
  std::fputs(text.p, stdout);
  if (cfg.verbose) std::fprintf(stderr, "report written to %s\n", path.p);
}

void cmd_info(const Config& cfg, const std::string& origami, bool offline) {
  int degree = 0, connected = 0;
  check(orc_origami_check(origami.c_str(), &degree, &connected));
  Owned text;
  if (offline || !connected) {
    check(orc_info(origami.c_str(), nullptr, nullptr, format_of(cfg.format), &text.p));
  } else {
    auto store = open_store(cfg);
    auto census = load_census(store.get(), cfg, degree);
    auto curves = load_curves(store.get(), census.get(), cfg);
    check(orc_info(origami.c_str(), census.get(), curves.get(), format_of(cfg.format), &text.p));
  }
  std::fputs(text.p, stdout);
}

void cmd_diagram(const Config& cfg, std::uint32_t component, const std::string& output) {
  auto store = open_store(cfg);
  auto census = load_census(store.get(), cfg, cfg.degree);
  auto curves = load_curves(store.get(), census.get(), cfg);
  Owned dot, path;
  check(orc_diagram(curves.get(), component, &dot.p));
  if (output == "-") {
    std::fputs(dot.p, stdout);
    return;
  }
  if (output.empty()) {
    check(orc_store_write_diagram(store.get(), cfg.degree, component, dot.p, &path.p));
    std::printf("%s\n", path.p);
    return;
  }
  std::FILE* f = std::fopen(output.c_str(), "wb");
  if (!f || std::fputs(dot.p, f) < 0 || std::fclose(f) != 0) {
    std::fprintf(stderr, "error: cannot write %s\n", output.c_str());
    throw Failure{ORC_IO};
  }
  std::printf("%s\n", output.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Census of origamis up to isomorphism, their Teichmueller curves and invariants"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub, bool with_degree) {
    if (with_degree) sub->add_option("--degree,-d", cfg.degree, "number of squares")->required()->check(CLI::Range(1, 16));
    sub->add_option("--workers,-j", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", cfg.cache, "cache directory (default $ORIGAMI_CACHE_DIR, then ~/.cache/origami)");
    sub->add_flag("--force", cfg.force, "recompute instead of reusing cached files");
    sub->add_flag("--verbose,-v", cfg.verbose, "progress on stderr");
  };

  auto* census = app.add_subcommand("census", "classify origamis of one degree and cache the classes");
  add_common(census, true);

  auto* curves = app.add_subcommand("curves", "compute the modular action and its orbits (curve components)");
  add_common(curves, true);

  auto* report = app.add_subcommand("report", "components that share degree, stratum, index, valency and genus");
  add_common(report, true);
  report->add_option("--format,-f", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::string origami;
  bool offline = false;
  auto* info = app.add_subcommand("info", "describe one origami");
  info->add_option("origami", origami, "e.g. \"x=(1,2); y=(1,2); eps=+-\"")->required();
  add_common(info, false);
  info->add_option("--format,-f", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  info->add_flag("--offline", offline, "skip the census and curve data");

  std::uint32_t component = 0;
  std::string output;
  auto* diagram = app.add_subcommand("diagram", "export one curve component as a DOT graph");
  add_common(diagram, true);
  diagram->add_option("--component,-c", component, "component id")->required();
  diagram->add_option("--output,-o", output, "output file, '-' for stdout (default: in the cache directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsageError;
  }

  try {
    if (*census) cmd_census(cfg);
    else if (*curves) cmd_curves(cfg);
    else if (*report) cmd_report(cfg);
    else if (*info) cmd_info(cfg, origami, offline);
    else if (*diagram) cmd_diagram(cfg, component, output);
  } catch (const Failure& f) {
    const char* msg = orc_last_error();
    std::fprintf(stderr, "error: %s\n", *msg ? msg : orc_status_name(f.status));
    return static_cast<int>(f.status);
  }
  return 0;
}
