#include "origami/action.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "origami/error.hpp"

namespace origami {

namespace {

using Cells = std::array<std::uint8_t, kMaxCells>;

int power(const Permutation& p, const Permutation& pinv, int sign, int a) { return sign > 0 ? p(a) : pinv(a); }

[[noreturn]] void walk_failure(const char* which, const Origami& o) {
  throw Error(ErrorCode::Internal, std::string(which) + " walk did not close on " + format_origami(o));
}

// Marks a as visited; a second visit means the walk is not a permutation.
void visit(std::uint32_t& left, int a, const char* which, const Origami& o) {
  if (!((left >> (a - 1)) & 1u)) walk_failure(which, o);
  left &= ~(1u << (a - 1));
}

}  // namespace

Origami act_T(const Origami& o) {
  validate(o);
  const int d = o.degree();
  const Permutation xinv = o.x.inverse(), yinv = o.y.inverse();
  Cells img{};
  SignVector eps(d);
  std::uint32_t left = (1u << d) - 1;
  while (left) {
    const int a0 = std::countr_zero(left) + 1;
    // `prev` is the cell reached before the x^-1 correction.
    int a = a0, prev = a0, sign = 1;
    do {
      const int b = power(o.x, xinv, sign, prev);
      const int reached = power(o.y, yinv, sign * o.eps(b), b);
      const int next_sign = sign * o.eps(b) * o.eps(reached);
      const int next = next_sign > 0 ? reached : xinv(reached);
      visit(left, a, "T", o);
      eps.set(a, sign);
      img[a - 1] = static_cast<std::uint8_t>(next);
      a = next;
      prev = reached;
      sign = next_sign;
    } while (a != a0);
    if (sign != 1) walk_failure("T", o);
  }
  return {o.x, Permutation::unchecked(d, img.data()), eps};
}

Origami act_S(const Origami& o) {
  validate(o);
  const int d = o.degree();
  const Permutation xinv = o.x.inverse(), yinv = o.y.inverse();

  // Vertical cylinders become horizontal ones; delta records the flips met.
  Cells xs{};
  SignVector delta(d);
  std::uint32_t left = (1u << d) - 1;
  while (left) {
    const int a0 = std::countr_zero(left) + 1;
    int a = a0, sign = 1;
    do {
      const int next = power(o.y, yinv, sign * o.eps(a), a);
      const int next_sign = sign * o.eps(a) * o.eps(next);
      visit(left, a, "S", o);
      delta.set(a, sign);
      xs[a - 1] = static_cast<std::uint8_t>(next);
      a = next;
      sign = next_sign;
    } while (a != a0);
    if (sign != 1) walk_failure("S", o);
  }

  Cells ys{};
  SignVector eps(d);
  left = (1u << d) - 1;
  while (left) {
    const int a0 = std::countr_zero(left) + 1;
    int a = a0, sign = 1;
    do {
      const int next = power(o.x, xinv, -sign * delta(a), a);
      const int next_sign = sign * delta(a) * delta(next);
      visit(left, a, "S", o);
      eps.set(a, sign);
      ys[a - 1] = static_cast<std::uint8_t>(next);
      a = next;
      sign = next_sign;
    } while (a != a0);
    if (sign != 1) walk_failure("S", o);
  }

  return canonicalize({Permutation::unchecked(d, xs.data()), Permutation::unchecked(d, ys.data()), eps});
}

Origami mirror(const Origami& o) {
  const DoubleCover cover = double_cover(o);
  const CoverPermutation xflip = cover.xhat.inverse();
  const int d = o.degree();
  Cells img{};
  for (int i = 1; i <= d; ++i) img[i - 1] = static_cast<std::uint8_t>(xflip(i));
  auto [y, eps] = restore(cover.yhat);
  return canonicalize({Permutation::unchecked(d, img.data()), y, eps});
}

std::uint32_t act_T(const Census& c, std::uint32_t id) { return c.find_class(act_T(c.at(id).representative())); }
std::uint32_t act_S(const Census& c, std::uint32_t id) { return c.find_class(act_S(c.at(id).representative())); }
std::uint32_t mirror(const Census& c, std::uint32_t id) { return c.find_class(mirror(c.at(id).representative())); }

ClassAction build_action(const Census& c, int workers) {
  ClassAction a;
  a.degree = c.degree();
  const std::size_t n = c.size();
  a.phi_T.resize(n);
  a.phi_S.resize(n);
  a.mirror.resize(n);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < chunks;) {
      try {
        for (std::size_t id = k * kChunk; id < std::min(n, (k + 1) * kChunk); ++id) {
          const auto cid = static_cast<std::uint32_t>(id);
          a.phi_T[id] = act_T(c, cid);
          a.phi_S[id] = act_S(c, cid);
          a.mirror[id] = mirror(c, cid);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  workers = std::max<int>(1, std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return a;
}

void validate_action(const ClassAction& a, std::size_t classes) {
  for (const auto* table : {&a.phi_T, &a.phi_S, &a.mirror}) {
    if (table->size() != classes) throw Error(ErrorCode::CacheCorrupt, "action table has the wrong length");
    std::vector<bool> hit(classes, false);
    for (std::uint32_t v : *table) {
      if (v >= classes || hit[v]) throw Error(ErrorCode::CacheCorrupt, "action table is not a permutation");
      hit[v] = true;
    }
  }
}

}  // namespace origami
