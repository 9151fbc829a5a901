#pragma once

// Slow reference implementations used only by the tests. They work on plain
// vectors and avoid the library's algorithms, so agreement is meaningful.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <vector>

#include "origami/surface.hpp"

namespace oracle {

using Map = std::vector<int>;  // 1-based images, entry 0 unused
using Signs = std::vector<int>;

struct Triple {
  Map x, y;
  Signs e;
  int d() const { return static_cast<int>(x.size()) - 1; }
};

inline Triple from(const origami::Origami& o) {
  Triple t;
  const int d = o.degree();
  t.x.assign(d + 1, 0);
  t.y.assign(d + 1, 0);
  t.e.assign(d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    t.x[i] = o.x(i);
    t.y[i] = o.y(i);
    t.e[i] = o.eps(i);
  }
  return t;
}

inline Map inverse(const Map& p) {
  Map r(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// Twisted power; empty when not a bijection.
inline Map twisted(const Map& p, const Signs& e) {
  const Map inv = inverse(p);
  Map r(p.size());
  std::vector<bool> hit(p.size());
  for (std::size_t i = 1; i < p.size(); ++i) {
    r[i] = e[i] > 0 ? p[i] : inv[i];
    if (hit[r[i]]) return {};
    hit[r[i]] = true;
  }
  return r;
}

inline bool next_perm(Map& p) { return std::next_permutation(p.begin() + 1, p.end()); }

inline Map identity(int d) {
  Map p(d + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Isomorphism by the four conditions on a signed relabelling sigma = delta * sbar.
inline bool lemma_isomorphic(const Triple& a, const Triple& b) {
  const int d = a.d();
  if (b.d() != d) return false;
  Map s = identity(d);
  do {
    const Map sinv = inverse(s);
    for (int mask = 0; mask < (1 << d); ++mask) {
      Signs delta(d + 1);
      for (int i = 1; i <= d; ++i) delta[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
      bool ok = true;
      for (int i = 1; i <= d && ok; ++i) ok = delta[i] == delta[a.x[i]];
      if (!ok) continue;
      const Map xd = twisted(a.x, delta);
      if (xd.empty()) continue;
      for (int i = 1; i <= d && ok; ++i) ok = b.x[s[i]] == s[xd[i]];
      if (!ok) continue;
      Signs eta(d + 1);
      for (int i = 1; i <= d; ++i) eta[i] = delta[sinv[i]] * a.e[sinv[i]] * b.e[i];
      for (int i = 1; i <= d && ok; ++i) ok = eta[i] == eta[b.y[i]];
      if (!ok) continue;
      Signs f(d + 1);
      for (int i = 1; i <= d; ++i) f[i] = delta[i] * a.e[i] * b.e[s[i]];
      const Map yf = twisted(a.y, f);
      if (yf.empty()) continue;
      for (int i = 1; i <= d && ok; ++i) ok = b.y[s[i]] == s[yf[i]];
      if (ok) return true;
    }
  } while (next_perm(s));
  return false;
}

// Double cover on labels ±1..d stored at index label + d.
struct Cover {
  int d = 0;
  std::vector<int> x, y;
  int X(int a) const { return x[a + d]; }
  int Y(int a) const { return y[a + d]; }
};

inline Cover cover(const Triple& t) {
  const int d = t.d();
  const Map xi = inverse(t.x), yi = inverse(t.y);
  auto eps = [&](int a) { return a > 0 ? t.e[a] : -t.e[-a]; };
  auto ypow = [&](int a, int k) {  // odd extension of y^k
    const int c = std::abs(a);
    const int v = k > 0 ? t.y[c] : yi[c];
    return a > 0 ? v : -v;
  };
  Cover c;
  c.d = d;
  c.x.assign(2 * d + 1, 0);
  c.y.assign(2 * d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    c.x[i + d] = t.x[i];
    c.x[-i + d] = -xi[i];
  }
  for (int a = -d; a <= d; ++a) {
    if (a == 0) continue;
    const int b = ypow(a, eps(a));
    c.y[a + d] = eps(a) * eps(b) * b;
  }
  return c;
}

// Some relabelling s with s(x_a) = x_b s, s(y_a) = y_b s and
// s(-u) = kappa(s(u)) where kappa is the half-turn of b (default u -> -u).
inline bool cover_isomorphic(const Cover& ca, const Cover& cb, const std::vector<int>& kappa = {}) {
  const int d = ca.d;
  if (cb.d != d) return false;
  auto half_turn = [&](int u) { return kappa.empty() ? -u : kappa[u + d]; };
  for (int target = -d; target <= d; ++target) {
    if (target == 0) continue;
    std::vector<int> s(2 * d + 1, 0);
    std::vector<bool> used(2 * d + 1, false);
    std::vector<int> queue;
    auto assign = [&](int from, int to) {
      if (s[from + d] != 0) return s[from + d] == to;
      const int mate = half_turn(to);
      if (used[to + d] || used[mate + d] || s[-from + d] != 0 || mate == to) return false;
      s[from + d] = to;
      s[-from + d] = mate;
      used[to + d] = used[mate + d] = true;
      queue.push_back(from);
      queue.push_back(-from);
      return true;
    };
    bool ok = assign(1, target);
    for (std::size_t q = 0; ok && q < queue.size(); ++q) {
      const int u = queue[q];
      ok = assign(ca.X(u), cb.X(s[u + d])) && assign(ca.Y(u), cb.Y(s[u + d]));
    }
    if (ok && static_cast<int>(queue.size()) == 2 * d) return true;
  }
  return false;
}

inline bool cover_isomorphic(const Triple& a, const Triple& b) {
  return a.d() == b.d() && cover_isomorphic(cover(a), cover(b));
}

// label -> p(q(label))
inline std::vector<int> compose(const Cover& c, const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (int a = -c.d; a <= c.d; ++a)
    if (a != 0) r[a + c.d] = p[q[a + c.d] + c.d];
  return r;
}

inline std::vector<int> inverse(const Cover& c, const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (int a = -c.d; a <= c.d; ++a)
    if (a != 0) r[p[a + c.d] + c.d] = a;
  return r;
}

inline long brute_stabilizer_size(const origami::Permutation& xp) {
  const int d = xp.degree();
  Map x(d + 1);
  for (int i = 1; i <= d; ++i) x[i] = xp(i);
  long count = 0;
  Map s = identity(d);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      Signs delta(d + 1);
      for (int i = 1; i <= d; ++i) delta[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
      bool ok = true;
      for (int i = 1; i <= d && ok; ++i) ok = delta[i] == delta[x[i]];
      if (!ok) continue;
      const Map xd = twisted(x, delta);
      if (xd.empty()) continue;
      for (int i = 1; i <= d && ok; ++i) ok = x[s[i]] == s[xd[i]];
      if (ok) ++count;
    }
  } while (next_perm(s));
  return count;
}

// Cone points by walking corners of the squares. Returns the order
// (angle / pi - 2) of every lattice vertex, sorted.
inline std::vector<int> corner_walk_orders(const Triple& t) {
  const int d = t.d();
  enum { SW, NW, NE, SE };
  const Map xi = inverse(t.x), yi = inverse(t.y);
  // Counter-clockwise around a vertex the walk leaves a square through the
  // edge SW -> W, NW -> N, NE -> E, SE -> S and lands on the matching corner
  // of the neighbour.
  auto step = [&](int cell, int corner, int& ncell, int& ncorner) {
    if (corner == NE) {
      ncell = t.x[cell];
      ncorner = NW;
      return;
    }
    if (corner == SW) {
      ncell = xi[cell];
      ncorner = SE;
      return;
    }
    // Cell i meets y(i) with its top if eps(i) = +, else its bottom; y(i)
    // receives with its bottom if eps(y(i)) = +, else its top. Equal sides
    // mean a half-turn, which swaps the two endpoints of the edge.
    const bool top = corner == NW;
    int other;
    bool other_top;
    if (top == (t.e[cell] > 0)) {
      other = t.y[cell];
      other_top = t.e[other] < 0;
    } else {
      other = yi[cell];
      other_top = t.e[other] > 0;
    }
    const bool left = corner == NW;  // NW is the left end of N, SE the right end of S
    const bool nleft = (top == other_top) ? !left : left;
    ncell = other;
    ncorner = other_top ? (nleft ? NW : NE) : (nleft ? SW : SE);
  };
  std::vector<std::array<bool, 4>> seen(d + 1, {false, false, false, false});
  std::vector<int> orders;
  for (int c0 = 1; c0 <= d; ++c0) {
    for (int k0 = 0; k0 < 4; ++k0) {
      if (seen[c0][k0]) continue;
      int corners = 0;
      for (int c = c0, k = k0; !seen[c][k];) {
        seen[c][k] = true;
        ++corners;
        int nc, nk;
        step(c, k, nc, nk);
        c = nc;
        k = nk;
      }
      orders.push_back(corners / 2 - 2);
    }
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace oracle
