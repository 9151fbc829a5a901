#pragma once

// On-disk caches for the census, the action tables and the component list.
//
// Every file starts with a header line
//   # <kind> v1 degree=<d> checksum=<fnv1a-64 of the body> source=<checksum of the input stage>
// followed by line records. A file whose header, checksum or content does not
// check out is treated as missing and recomputed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "origami/curves.hpp"
#include "origami/invariants.hpp"

namespace origami {

inline constexpr int kCacheVersion = 1;

std::uint64_t fnv1a(std::string_view bytes);
std::string checksum_hex(std::string_view bytes);

// Header plus body. `source` is the checksum of the stage the body was
// derived from ("-" for the census).
std::string wrap_cache(std::string_view kind, int degree, std::string_view source, std::string_view body);
// Returns the body. Throws Error(CacheCorrupt) on any header or checksum mismatch.
std::string unwrap_cache(std::string_view text, std::string_view kind, int degree, std::string_view source);

// d=<d>; x=<cycles>; y=<cycles>; eps=<signs>; size=<n>; abelian=<0|1>
std::string census_records(const Census& c);
Census parse_census_records(int degree, std::string_view body, int workers = 1);

// <id> <phi_T> <phi_S> <mirror>
std::string action_records(const ClassAction& a);
ClassAction parse_action_records(int degree, std::string_view body, std::size_t classes);

// comp=<id>; degree=<d>; abelian=<0|1>; index=<n>; valency=(...); genus=<g>; members=[ids]
std::string component_records(int degree, const std::vector<CurveComponent>& comps);
// Components are recomputed from the action and must match the records.
std::vector<CurveComponent> parse_component_records(int degree, std::string_view body, const ClassAction& a,
                                                    const Census& c);

// A cache directory owned by one process at a time (advisory lock on
// <dir>/lock). Loaders return the cached stage when it validates, otherwise
// compute it and write it back; `force` skips the cached copy.
class Store {
 public:
  // Creates the directory. Throws Error(Io) if that fails and Error(Resource)
  // if another process holds the lock.
  explicit Store(std::filesystem::path dir);
  ~Store();
  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path census_path(int degree) const;
  std::filesystem::path action_path(int degree) const;
  std::filesystem::path components_path(int degree) const;
  std::filesystem::path report_path(int degree, ReportFormat f) const;
  std::filesystem::path diagram_path(int degree, std::uint32_t component) const;

  Census census(int degree, int workers, bool force, bool* reused = nullptr);
  ClassAction action(const Census& c, int workers, bool force, bool* reused = nullptr);
  std::vector<CurveComponent> components(const Census& c, const ClassAction& a, bool force,
                                         bool* reused = nullptr);

  // True if a valid census file for `degree` is present.
  bool has_census(int degree) const;

  // Writes `text` atomically (temporary file + rename).
  void write_file(const std::filesystem::path& path, std::string_view text) const;

 private:
  std::filesystem::path dir_;
  int lock_fd_ = -1;
};

}  // namespace origami
