#include "origami/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

namespace fs = std::filesystem;

namespace {

Error corrupt(const std::string& what) { return Error(ErrorCode::CacheCorrupt, what); }

std::vector<std::string_view> split_lines(std::string_view body) {
  std::vector<std::string_view> out;
  while (!body.empty()) {
    const auto nl = body.find('\n');
    if (nl == std::string_view::npos) throw corrupt("record is not newline-terminated");
    out.push_back(body.substr(0, nl));
    body.remove_prefix(nl + 1);
  }
  return out;
}

// "k1=v1; k2=v2" in the given key order.
std::vector<std::string_view> fields(std::string_view line, std::initializer_list<std::string_view> keys) {
  std::vector<std::string_view> out;
  for (auto key : keys) {
    if (!out.empty()) {
      if (line.substr(0, 2) != "; ") throw corrupt("malformed record");
      line.remove_prefix(2);
    }
    if (line.size() <= key.size() || line.substr(0, key.size()) != key || line[key.size()] != '=')
      throw corrupt("expected field '" + std::string(key) + "'");
    line.remove_prefix(key.size() + 1);
    const auto end = line.find("; ");
    out.push_back(line.substr(0, end));
    line.remove_prefix(end == std::string_view::npos ? line.size() : end);
  }
  if (!line.empty()) throw corrupt("trailing data in record");
  return out;
}

template <class T>
T number(std::string_view s) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw corrupt("bad number '" + std::string(s) + "'");
  return v;
}

bool flag(std::string_view s) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw corrupt("bad flag '" + std::string(s) + "'");
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string checksum_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string wrap_cache(std::string_view kind, int degree, std::string_view source, std::string_view body) {
  std::string out = "# " + std::string(kind) + " v" + std::to_string(kCacheVersion) + " degree=" +
                    std::to_string(degree) + " checksum=" + checksum_hex(body) + " source=" + std::string(source) +
                    "\n";
  out += body;
  return out;
}

std::string unwrap_cache(std::string_view text, std::string_view kind, int degree, std::string_view source) {
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos) throw corrupt("missing cache header");
  const std::string_view body = text.substr(nl + 1);
  std::istringstream header{std::string(text.substr(0, nl))};
  std::string hash, k, version, deg, sum, src, extra;
  header >> hash >> k >> version >> deg >> sum >> src;
  const std::string where = std::string(kind) + " cache";
  if (hash != "#" || k != kind || header >> extra) throw corrupt(where + ": malformed header");
  if (version != "v" + std::to_string(kCacheVersion)) throw corrupt(where + ": unsupported version " + version);
  if (deg != "degree=" + std::to_string(degree)) throw corrupt(where + ": wrong degree (" + deg + ")");
  if (src != "source=" + std::string(source)) throw corrupt(where + ": built from different input");
  if (sum != "checksum=" + checksum_hex(body)) throw corrupt(where + ": checksum mismatch");
  return std::string(body);
}

std::string census_records(const Census& c) {
  std::string out;
  for (const auto& cls : c.classes()) {
    out += "d=" + std::to_string(c.degree()) + "; " + format_origami(cls.representative()) +
           "; size=" + std::to_string(cls.size) + "; abelian=" + (cls.abelian ? "1" : "0") + "\n";
  }
  return out;
}

Census parse_census_records(int degree, std::string_view body, int workers) {
  std::vector<OrigamiClass> classes;
  for (auto line : split_lines(body)) {
    const auto f = fields(line, {"d", "x", "y", "eps", "size", "abelian"});
    if (number<int>(f[0]) != degree) throw corrupt("census record of another degree");
    Origami o;
    try {
      o = parse_origami("x=" + std::string(f[1]) + "; y=" + std::string(f[2]) + "; eps=" + std::string(f[3]));
    } catch (const Error& e) {
      throw corrupt(std::string("census record: ") + e.what());
    }
    if (o.degree() != degree) throw corrupt("census record of another degree");
    OrigamiClass cls;
    cls.id = static_cast<std::uint32_t>(classes.size());
    cls.x = o.x;
    cls.rep = {o.y, o.eps};
    cls.size = number<std::uint64_t>(f[4]);
    cls.abelian = flag(f[5]);
    classes.push_back(std::move(cls));
  }
  return Census::from_classes(degree, std::move(classes), workers);
}

std::string action_records(const ClassAction& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out += std::to_string(i) + ' ' + std::to_string(a.phi_T[i]) + ' ' + std::to_string(a.phi_S[i]) + ' ' +
           std::to_string(a.mirror[i]) + '\n';
  return out;
}

ClassAction parse_action_records(int degree, std::string_view body, std::size_t classes) {
  ClassAction a;
  a.degree = degree;
  for (auto line : split_lines(body)) {
    std::uint32_t v[4];
    for (int k = 0; k < 4; ++k) {
      const auto sp = line.find(' ');
      if ((k < 3) == (sp == std::string_view::npos)) throw corrupt("malformed action record");
      v[k] = number<std::uint32_t>(line.substr(0, sp));
      line.remove_prefix(k < 3 ? sp + 1 : line.size());
    }
    if (v[0] != a.size()) throw corrupt("action records out of order");
    a.phi_T.push_back(v[1]);
    a.phi_S.push_back(v[2]);
    a.mirror.push_back(v[3]);
  }
  if (a.size() != classes) throw corrupt("action table does not cover the census");
  validate_action(a, classes);
  return a;
}

std::string component_records(int degree, const std::vector<CurveComponent>& comps) {
  std::string out;
  for (const auto& comp : comps) {
    out += "comp=" + std::to_string(comp.id) + "; degree=" + std::to_string(degree) +
           "; abelian=" + (comp.abelian ? "1" : "0") + "; index=" + std::to_string(comp.index()) +
           "; valency=" + format_valency(comp.valency) + "; genus=" + std::to_string(comp.genus) + "; members=[";
    for (std::size_t k = 0; k < comp.members.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(comp.members[k]);
    }
    out += "]\n";
  }
  return out;
}

std::vector<CurveComponent> parse_component_records(int degree, std::string_view body, const ClassAction& a,
                                                    const Census& c) {
  // Check the record syntax first so a damaged file reports as such.
  for (auto line : split_lines(body)) {
    const auto f = fields(line, {"comp", "degree", "abelian", "index", "valency", "genus", "members"});
    number<std::uint32_t>(f[0]);
    if (number<int>(f[1]) != degree) throw corrupt("component record of another degree");
    flag(f[2]);
    number<std::size_t>(f[3]);
    number<int>(f[5]);
    if (f[6].size() < 2 || f[6].front() != '[' || f[6].back() != ']') throw corrupt("malformed member list");
  }
  auto comps = components(a, c);
  if (component_records(degree, comps) != body) throw corrupt("component records do not match the action tables");
  return comps;
}

Store::Store(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw Error(ErrorCode::Io, "cannot create cache directory " + dir_.string());
  const auto lock = dir_ / "lock";
  lock_fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (lock_fd_ < 0) throw Error(ErrorCode::Io, "cannot open lock file " + lock.string());
  if (::flock(lock_fd_, LOCK_EX | LOCK_NB) != 0) {
    ::close(lock_fd_);
    lock_fd_ = -1;
    throw Error(ErrorCode::Resource, "cache directory " + dir_.string() + " is in use by another process");
  }
}

Store::~Store() {
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

fs::path Store::census_path(int degree) const { return dir_ / ("census-d" + std::to_string(degree) + ".txt"); }
fs::path Store::action_path(int degree) const { return dir_ / ("action-d" + std::to_string(degree) + ".txt"); }
fs::path Store::components_path(int degree) const {
  return dir_ / ("components-d" + std::to_string(degree) + ".txt");
}
fs::path Store::report_path(int degree, ReportFormat f) const {
  const char* ext = f == ReportFormat::Json ? ".json" : f == ReportFormat::Csv ? ".csv" : ".txt";
  return dir_ / ("report-d" + std::to_string(degree) + ext);
}
fs::path Store::diagram_path(int degree, std::uint32_t component) const {
  return dir_ / ("diagram-d" + std::to_string(degree) + "-c" + std::to_string(component) + ".dot");
}

void Store::write_file(const fs::path& path, std::string_view text) const {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace " + path.string() + ": " + ec.message());
}

bool Store::has_census(int degree) const {
  const auto p = census_path(degree);
  if (!fs::exists(p)) return false;
  try {
    unwrap_cache(read_file(p), "census", degree, "-");
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Returns the cached body of `path` if it validates, else an empty optional.
namespace {

template <class Parse>
auto try_load(const fs::path& path, bool force, Parse&& parse) -> std::optional<decltype(parse(std::string()))> {
  if (force || !fs::exists(path)) return std::nullopt;
  try {
    return parse(read_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CacheCorrupt) throw;
    return std::nullopt;
  }
}

}  // namespace

Census Store::census(int degree, int workers, bool force, bool* reused) {
  const auto path = census_path(degree);
  auto cached = try_load(path, force, [&](const std::string& text) {
    return parse_census_records(degree, unwrap_cache(text, "census", degree, "-"), workers);
  });
  if (reused) *reused = cached.has_value();
  if (cached) return std::move(*cached);
  Census c = Census::build(degree, workers);
  write_file(path, wrap_cache("census", degree, "-", census_records(c)));
  return c;
}

ClassAction Store::action(const Census& c, int workers, bool force, bool* reused) {
  const int degree = c.degree();
  const auto path = action_path(degree);
  const std::string source = checksum_hex(census_records(c));
  auto cached = try_load(path, force, [&](const std::string& text) {
    return parse_action_records(degree, unwrap_cache(text, "action", degree, source), c.size());
  });
  if (reused) *reused = cached.has_value();
  if (cached) return std::move(*cached);
  ClassAction a = build_action(c, workers);
  write_file(path, wrap_cache("action", degree, source, action_records(a)));
  return a;
}

std::vector<CurveComponent> Store::components(const Census& c, const ClassAction& a, bool force, bool* reused) {
  const int degree = c.degree();
  const auto path = components_path(degree);
  const std::string source = checksum_hex(action_records(a));
  auto cached = try_load(path, force, [&](const std::string& text) {
    return parse_component_records(degree, unwrap_cache(text, "components", degree, source), a, c);
  });
  if (reused) *reused = cached.has_value();
  if (cached) return std::move(*cached);
  auto comps = origami::components(a, c);
  write_file(path, wrap_cache("components", degree, source, component_records(degree, comps)));
  return comps;
}

}  // namespace origami
