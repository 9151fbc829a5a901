#include "origami/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxCells)
    throw Error(ErrorCode::InvalidArgument,
                "degree " + std::to_string(degree) + " outside 0.." + std::to_string(kMaxCells));
}

void require_same_degree(int a, int b, const char* op) {
  if (a != b)
    throw Error(ErrorCode::InvalidArgument, std::string(op) + ": degree mismatch (" +
                                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

Permutation::Permutation(int degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) img_[i] = static_cast<std::uint8_t>(i + 1);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int d = static_cast<int>(images.size());
  check_degree(d);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(d);
  std::uint32_t seen = 0;
  for (int i = 0; i < d; ++i) {
    const int v = images[i];
    if (v < 1 || v > d || (seen >> (v - 1)) & 1u)
      throw Error(ErrorCode::InvalidArgument, "images do not form a permutation");
    seen |= 1u << (v - 1);
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::unchecked(int degree, const std::uint8_t* images) {
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  std::copy_n(images, degree, p.img_.begin());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[img_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int i = 1; i <= degree_; ++i) {
    if ((seen >> (i - 1)) & 1u) continue;
    std::vector<int> c;
    for (int j = i; !((seen >> (j - 1)) & 1u); j = (*this)(j)) {
      seen |= 1u << (j - 1);
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Permutation::cycle_count() const {
  int n = 0;
  std::uint32_t seen = 0;
  for (int i = 1; i <= degree_; ++i) {
    if ((seen >> (i - 1)) & 1u) continue;
    ++n;
    for (int j = i; !((seen >> (j - 1)) & 1u); j = (*this)(j)) seen |= 1u << (j - 1);
  }
  return n;
}

std::vector<int> Permutation::images() const { return {img_.begin(), img_.begin() + degree_}; }

std::uint64_t Permutation::rank() const {
  // Lehmer code.
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < degree_; ++i) {
    const int v = img_[i] - 1;
    const int smaller_unused = v - std::popcount(used & ((1u << v) - 1));
    r = r * static_cast<std::uint64_t>(degree_ - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << v;
  }
  return r;
}

Permutation Permutation::unrank(int degree, std::uint64_t rank) {
  check_degree(degree);
  std::array<int, kMaxCells> digits{};
  for (int i = degree - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(degree - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  std::uint32_t used = 0;
  for (int i = 0; i < degree; ++i) {
    int k = digits[i];
    int v = 0;
    for (;; ++v) {
      if ((used >> v) & 1u) continue;
      if (k-- == 0) break;
    }
    used |= 1u << v;
    p.img_[i] = static_cast<std::uint8_t>(v + 1);
  }
  return p;
}

SignVector SignVector::from_mask(int degree, std::uint32_t minus_mask) {
  check_degree(degree);
  SignVector e(degree);
  e.minus_ = minus_mask & ((1u << degree) - 1);
  return e;
}

SignVector SignVector::from_rank(int degree, std::uint32_t rank) {
  std::uint32_t mask = 0;
  for (int i = 1; i <= degree; ++i)
    if ((rank >> (degree - i)) & 1u) mask |= 1u << (i - 1);
  return from_mask(degree, mask);
}

void SignVector::set(int i, int sign) {
  if (sign < 0)
    minus_ |= 1u << (i - 1);
  else
    minus_ &= ~(1u << (i - 1));
}

std::uint32_t SignVector::rank() const {
  std::uint32_t r = 0;
  for (int i = 1; i <= degree_; ++i) r = (r << 1) | ((minus_ >> (i - 1)) & 1u);
  return r;
}

SignVector SignVector::operator-() const { return from_mask(degree_, ~minus_); }

SignVector operator*(const SignVector& a, const SignVector& b) {
  require_same_degree(a.degree(), b.degree(), "sign product");
  return SignVector::from_mask(a.degree(), a.minus_ ^ b.minus_);
}

SignVector SignVector::after(const Permutation& p) const {
  require_same_degree(degree_, p.degree(), "sign composition");
  SignVector r(degree_);
  for (int i = 1; i <= degree_; ++i)
    if ((*this)(p(i)) < 0) r.minus_ |= 1u << (i - 1);
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  // sigma(i) = s(i) base(i)  =>  sigma^-1(j) = s(base^-1(j)) base^-1(j)
  Permutation inv = base.inverse();
  return {inv, sign.after(inv)};
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a.degree(), b.degree(), "compose");
  std::array<std::uint8_t, kMaxCells> img{};
  for (int i = 1; i <= a.degree(); ++i) img[i - 1] = static_cast<std::uint8_t>(a(b(i)));
  return Permutation::unchecked(a.degree(), img.data());
}

Permutation conjugate(const Permutation& t, const Permutation& s) {
  require_same_degree(t.degree(), s.degree(), "conjugate");
  std::array<std::uint8_t, kMaxCells> img{};
  // (t s t^-1)(t(i)) = t(s(i))
  for (int i = 1; i <= t.degree(); ++i) img[t(i) - 1] = static_cast<std::uint8_t>(t(s(i)));
  return Permutation::unchecked(t.degree(), img.data());
}

std::optional<Permutation> twisted_power(const Permutation& x, const SignVector& e) {
  require_same_degree(x.degree(), e.degree(), "twisted_power");
  const int d = x.degree();
  std::array<std::uint8_t, kMaxCells> img{};
  std::array<std::uint8_t, kMaxCells> inv{};
  for (int i = 1; i <= d; ++i) inv[x(i) - 1] = static_cast<std::uint8_t>(i);
  std::uint32_t hit = 0;
  for (int i = 1; i <= d; ++i) {
    const int v = e(i) > 0 ? x(i) : inv[i - 1];
    if ((hit >> (v - 1)) & 1u) return std::nullopt;
    hit |= 1u << (v - 1);
    img[i - 1] = static_cast<std::uint8_t>(v);
  }
  return Permutation::unchecked(d, img.data());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({cur});
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "partitions: degree must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, d, cur, out);
  return out;
}

Partition partition_of(const Permutation& p) { return {p.cycle_type()}; }

Permutation canonical_x(const Partition& p) {
  const int d = p.total();
  check_degree(d);
  std::array<std::uint8_t, kMaxCells> img{};
  int start = 0;
  for (int len : p.parts) {
    if (len < 1) throw Error(ErrorCode::InvalidArgument, "partition with non-positive part");
    for (int k = 0; k < len; ++k) img[start + k] = static_cast<std::uint8_t>(start + (k + 1) % len + 1);
    start += len;
  }
  return Permutation::unchecked(d, img.data());
}

Permutation canonicalizing_conjugator(const Permutation& x) {
  auto cyc = x.cycles();
  std::stable_sort(cyc.begin(), cyc.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::array<std::uint8_t, kMaxCells> img{};
  int next = 1;
  for (const auto& c : cyc)
    for (int v : c) img[v - 1] = static_cast<std::uint8_t>(next++);
  return Permutation::unchecked(x.degree(), img.data());
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string format_cycles(const Permutation& p) {
  if (p.degree() == 0) return "()";
  std::string s;
  for (const auto& c : p.cycles()) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation parse_cycles(std::string_view text, int degree) {
  check_degree(degree);
  std::array<int, kMaxCells> img{};
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  std::uint32_t used = 0;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::Parse, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("unexpected character");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw fail("cell " + std::to_string(v) + " out of range");
      if ((used >> (v - 1)) & 1u) throw fail("cell " + std::to_string(v) + " repeated");
      used |= 1u << (v - 1);
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation::from_images(std::span<const int>(img.data(), static_cast<std::size_t>(degree)));
}

std::string format_signs(const SignVector& e) {
  std::string s;
  for (int i = 1; i <= e.degree(); ++i) s += e(i) > 0 ? '+' : '-';
  return s;
}

SignVector parse_signs(std::string_view text) {
  const int d = static_cast<int>(text.size());
  if (d < 1 || d > kMaxCells) throw Error(ErrorCode::Parse, "sign string length out of range");
  SignVector e(d);
  for (int i = 1; i <= d; ++i) {
    const char c = text[i - 1];
    if (c == '-')
      e.set(i, -1);
    else if (c != '+')
      throw Error(ErrorCode::Parse, "sign string may only contain '+' and '-'");
  }
  return e;
}

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p.parts[k]);
  }
  return s + ")";
}

}  // namespace origami
