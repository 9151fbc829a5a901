#include "origami/surface.hpp"

#include <cctype>
#include <cstdlib>

#include "origami/error.hpp"

namespace origami {

void validate(const Origami& o) {
  if (o.x.degree() != o.y.degree() || o.x.degree() != o.eps.degree() || o.x.degree() < 1)
    throw Error(ErrorCode::InvalidArgument, "origami parts disagree on degree");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Origami parse_origami(std::string_view text) {
  std::string_view xs, ys, es;
  bool have_x = false, have_y = false, have_e = false;
  while (!text.empty()) {
    const auto semi = text.find(';');
    std::string_view field = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Parse, "origami field without '=': " + std::string(field));
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "x") {
      xs = value;
      have_x = true;
    } else if (key == "y") {
      ys = value;
      have_y = true;
    } else if (key == "eps") {
      es = value;
      have_e = true;
    } else if (key != "d") {
      throw Error(ErrorCode::Parse, "unknown origami field '" + std::string(key) + "'");
    }
  }
  if (!have_x || !have_y || !have_e)
    throw Error(ErrorCode::Parse, "origami text needs x=, y= and eps= fields");
  Origami o;
  o.eps = parse_signs(es);
  o.x = parse_cycles(xs, o.eps.degree());
  o.y = parse_cycles(ys, o.eps.degree());
  return o;
}

std::string format_origami(const Origami& o) {
  return "x=" + format_cycles(o.x) + "; y=" + format_cycles(o.y) + "; eps=" + format_signs(o.eps);
}

CoverPermutation::CoverPermutation(int degree) : degree_(static_cast<std::uint8_t>(degree)) {
  if (degree < 0 || degree > kMaxCells) throw Error(ErrorCode::InvalidArgument, "cover degree out of range");
  for (int i = 1; i <= degree; ++i) {
    set(i, i);
    set(-i, -i);
  }
}

CoverPermutation CoverPermutation::inverse() const {
  CoverPermutation r(degree_);
  for (int i = 1; i <= degree_; ++i) {
    r.set((*this)(i), i);
    r.set((*this)(-i), -i);
  }
  return r;
}

std::vector<std::vector<int>> CoverPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, 2 * kMaxCells> seen{};
  for (int i = 1; i <= degree_; ++i) {
    for (int start : {i, -i}) {
      if (seen[slot(start)]) continue;
      std::vector<int> c;
      for (int a = start; !seen[slot(a)]; a = (*this)(a)) {
        seen[slot(a)] = true;
        c.push_back(a);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool CoverPermutation::is_bijective() const {
  std::array<bool, 2 * kMaxCells> hit{};
  for (int i = 1; i <= degree_; ++i) {
    for (int a : {i, -i}) {
      const int v = (*this)(a);
      if (v == 0 || std::abs(v) > degree_ || hit[slot(v)]) return false;
      hit[slot(v)] = true;
    }
  }
  return true;
}

CoverPermutation compose(const CoverPermutation& a, const CoverPermutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidArgument, "compose: cover degree mismatch");
  CoverPermutation r(a.degree());
  for (int i = 1; i <= a.degree(); ++i) {
    r.set(i, a(b(i)));
    r.set(-i, a(b(-i)));
  }
  return r;
}

std::string format_cover_cycles(const CoverPermutation& p) {
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

CoverPermutation cover_of_x(const Permutation& x) {
  const int d = x.degree();
  CoverPermutation r(d);
  for (int i = 1; i <= d; ++i) {
    r.set(i, x(i));
    r.set(-x(i), -i);  // x(-j) = -x^{-1}(j)
  }
  return r;
}

CoverPermutation cover_of_y(const Permutation& y, const SignVector& eps) {
  const int d = y.degree();
  if (eps.degree() != d) throw Error(ErrorCode::InvalidArgument, "cover_of_y: degree mismatch");
  const Permutation yinv = y.inverse();
  CoverPermutation r(d);
  for (int i = 1; i <= d; ++i) {
    // +i: exponent eps(i); -i: exponent -eps(i), and y^k(-i) = -y^k(i).
    for (int s : {1, -1}) {
      const int e = s * eps(i);
      const int t = e > 0 ? y(i) : yinv(i);
      const int target = s * t;
      r.set(s * i, e * target * (s * eps(t)));
    }
  }
  return r;
}

DoubleCover double_cover(const Origami& o) {
  validate(o);
  return {cover_of_x(o.x), cover_of_y(o.y, o.eps)};
}

std::pair<Permutation, SignVector> restore(const CoverPermutation& yhat) {
  const int d = yhat.degree();
  if (!yhat.is_bijective()) throw Error(ErrorCode::InvalidArgument, "restore: not a permutation of ±cells");
  std::array<std::uint8_t, kMaxCells> img{};
  SignVector eps(d);
  std::uint32_t seen = 0;
  for (int m = 1; m <= d; ++m) {
    if ((seen >> (m - 1)) & 1u) continue;
    int a = m;
    do {
      const int cell = std::abs(a);
      if ((seen >> (cell - 1)) & 1u)
        throw Error(ErrorCode::InvalidArgument, "restore: cycle meets a cell and its rotated copy");
      seen |= 1u << (cell - 1);
      const int b = yhat(a);
      img[cell - 1] = static_cast<std::uint8_t>(std::abs(b));
      eps.set(cell, a > 0 ? 1 : -1);
      a = b;
    } while (a != m);
  }
  Permutation y = Permutation::unchecked(d, img.data());
  if (cover_of_y(y, eps) != yhat)
    throw Error(ErrorCode::InvalidArgument, "restore: cycles are not paired with their reversed negations");
  return {y, eps};
}

std::vector<std::vector<int>> cover_orbits(const DoubleCover& cover) {
  const int d = cover.xhat.degree();
  auto slot = [d](int a) { return a > 0 ? a - 1 : d - a - 1; };
  std::array<bool, 2 * kMaxCells> seen{};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= d; ++i) {
    for (int start : {i, -i}) {
      if (seen[slot(start)]) continue;
      std::vector<int> orbit{start};
      seen[slot(start)] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const CoverPermutation* g : {&cover.xhat, &cover.yhat}) {
          const int b = (*g)(orbit[k]);
          if (!seen[slot(b)]) {
            seen[slot(b)] = true;
            orbit.push_back(b);
          }
        }
      }
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

bool is_connected(const Permutation& x, const Permutation& y) {
  const int d = x.degree();
  if (d == 0) return false;
  const std::uint32_t all = (d == 32) ? ~0u : (1u << d) - 1;
  std::uint32_t seen = 1;
  std::array<int, kMaxCells> stack{};
  int top = 0;
  stack[top++] = 1;
  while (top) {
    const int a = stack[--top];
    for (int b : {x(a), y(a)}) {
      if (!((seen >> (b - 1)) & 1u)) {
        seen |= 1u << (b - 1);
        stack[top++] = b;
      }
    }
  }
  return seen == all;
}

bool is_connected(const Origami& o) {
  validate(o);
  return is_connected(o.x, o.y);
}

bool is_abelian(const Origami& o) {
  if (!is_connected(o)) throw Error(ErrorCode::Disconnected, "is_abelian: origami is not connected");
  return cover_orbits(double_cover(o)).size() > 1;
}

}  // namespace origami
