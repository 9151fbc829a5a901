#include "origami/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>

#include "origami/error.hpp"

namespace origami {

namespace {

constexpr std::uint64_t kTableBudgetBytes = 4ull << 30;

using Cells = std::array<std::uint8_t, kMaxCells>;

void stabilizer_rec(const std::vector<std::vector<int>>& cyc, std::size_t k, std::vector<bool>& used,
                    Cells& base, std::uint32_t& minus, int d, std::vector<SignedPermutation>& out) {
  if (k == cyc.size()) {
    out.push_back({Permutation::unchecked(d, base.data()), SignVector::from_mask(d, minus)});
    return;
  }
  const auto& c = cyc[k];
  const int len = static_cast<int>(c.size());
  for (std::size_t t = 0; t < cyc.size(); ++t) {
    if (used[t] || static_cast<int>(cyc[t].size()) != len) continue;
    used[t] = true;
    const auto& target = cyc[t];
    for (int sign : {1, -1}) {
      for (int r = 0; r < len; ++r) {
        for (int j = 0; j < len; ++j) {
          const int pos = sign > 0 ? (j + r) % len : ((r - j) % len + len) % len;
          base[c[j] - 1] = static_cast<std::uint8_t>(target[pos]);
          if (sign < 0)
            minus |= 1u << (c[j] - 1);
          else
            minus &= ~(1u << (c[j] - 1));
        }
        stabilizer_rec(cyc, k + 1, used, base, minus, d, out);
      }
    }
    used[t] = false;
  }
}

// Calls emit(y_images, eps_minus_mask) for every (sigma, cycle-sign choice);
// members may repeat.
template <class Emit>
void enumerate_class(const Origami& o, std::span<const SignedPermutation> stab, Emit&& emit) {
  const int d = o.degree();
  Cells y{}, yinv{};
  for (int i = 1; i <= d; ++i) {
    y[i - 1] = static_cast<std::uint8_t>(o.y(i));
    yinv[o.y(i) - 1] = static_cast<std::uint8_t>(i);
  }
  std::array<int, kMaxCells> cycle_of{};
  int ncycles = 0;
  {
    std::uint32_t seen = 0;
    for (int i = 1; i <= d; ++i) {
      if ((seen >> (i - 1)) & 1u) continue;
      for (int j = i; !((seen >> (j - 1)) & 1u); j = y[j - 1]) {
        seen |= 1u << (j - 1);
        cycle_of[j - 1] = ncycles;
      }
      ++ncycles;
    }
  }
  const std::uint32_t eps = o.eps.minus_mask();
  Cells out{};
  for (const auto& sigma : stab) {
    const std::uint32_t delta = sigma.sign.minus_mask();
    for (std::uint32_t nu = 0; nu < (1u << ncycles); ++nu) {
      std::uint32_t eps_out = 0;
      for (int i = 1; i <= d; ++i) {
        const bool inverted = (nu >> cycle_of[i - 1]) & 1u;
        const int yi = inverted ? yinv[i - 1] : y[i - 1];
        const int bi = sigma.base(i);
        out[bi - 1] = static_cast<std::uint8_t>(sigma.base(yi));
        // eta = eps * (eps' ∘ base) * delta  =>  eps'(base(i)) = eta(i) eps(i) delta(i)
        const std::uint32_t bit =
            (inverted ? 1u : 0u) ^ ((eps >> (i - 1)) & 1u) ^ ((delta >> (i - 1)) & 1u);
        eps_out |= bit << (bi - 1);
      }
      emit(out, eps_out);
    }
  }
}

std::uint64_t rank_cells(const Cells& img, int d) {
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < d; ++i) {
    const int v = img[i] - 1;
    const int smaller_unused = v - std::popcount(used & ((1u << v) - 1));
    r = r * static_cast<std::uint64_t>(d - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << v;
  }
  return r;
}

std::uint32_t rank_mask(std::uint32_t minus, int d) {
  std::uint32_t r = 0;
  for (int i = 0; i < d; ++i) r = (r << 1) | ((minus >> i) & 1u);
  return r;
}

}  // namespace

std::vector<SignedPermutation> stabilizer_x(const Permutation& x) {
  const auto cyc = x.cycles();
  std::vector<bool> used(cyc.size(), false);
  Cells base{};
  std::uint32_t minus = 0;
  std::vector<SignedPermutation> out;
  stabilizer_rec(cyc, 0, used, base, minus, x.degree(), out);
  return out;
}

std::vector<ClassMember> restricted_class(const Origami& o, std::span<const SignedPermutation> stab) {
  if (!is_connected(o)) throw Error(ErrorCode::Disconnected, "restricted_class: origami is not connected");
  const int d = o.degree();
  std::vector<ClassMember> out;
  enumerate_class(o, stab, [&](const Cells& y, std::uint32_t eps) {
    out.push_back({Permutation::unchecked(d, y.data()), SignVector::from_mask(d, eps)});
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClassMember> restricted_class(const Origami& o) {
  validate(o);
  const auto stab = stabilizer_x(o.x);
  return restricted_class(o, stab);
}

std::vector<ClassMember> restricted_class_exhaustive(const Origami& o,
                                                     std::span<const SignedPermutation> stab) {
  if (!is_connected(o)) throw Error(ErrorCode::Disconnected, "restricted_class: origami is not connected");
  const int d = o.degree();
  std::vector<ClassMember> out;
  for (const auto& sigma : stab) {
    const Permutation base_inv = sigma.base.inverse();
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      const SignVector eps2 = SignVector::from_mask(d, mask);
      const auto powered = twisted_power(o.y, o.eps * eps2.after(sigma.base) * sigma.sign);
      if (!powered) continue;
      const Permutation y2 = conjugate(sigma.base, *powered);
      // xi(y2, eta) = eta · (eta ∘ y2) must be +1 everywhere
      const SignVector eta = sigma.sign.after(base_inv) * o.eps.after(base_inv) * eps2;
      if (!(eta * eta.after(y2)).all_plus()) continue;
      out.push_back({y2, eps2});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Origami canonicalize(const Origami& o) {
  validate(o);
  const Permutation t = canonicalizing_conjugator(o.x);
  return {conjugate(t, o.x), conjugate(t, o.y), o.eps.after(t.inverse())};
}

std::uint64_t Census::table_bytes(int degree) {
  const auto parts = origami::partitions(degree).size();
  return static_cast<std::uint64_t>(parts) * factorial(degree) * (1ull << degree) * sizeof(std::uint32_t);
}

std::size_t Census::slot(int partition_index, const Permutation& y, const SignVector& eps) const {
  const std::uint64_t per_partition = factorial(degree_) << degree_;
  return static_cast<std::size_t>(static_cast<std::uint64_t>(partition_index) * per_partition +
                                  (y.rank() << degree_) + eps.rank());
}

namespace {

void check_degree_for_census(int degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "census degree must be >= 1");
  if (degree > 9 || Census::table_bytes(degree) > kTableBudgetBytes)
    throw Error(ErrorCode::Resource, "census of degree " + std::to_string(degree) +
                                         " exceeds the memory budget of the lookup table");
}

template <class Job>
void run_parallel(int jobs, int workers, Job&& job) {
  workers = std::max(1, std::min(workers, jobs));
  if (workers == 1) {
    for (int j = 0; j < jobs; ++j) job(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int j; (j = next.fetch_add(1)) < jobs;) {
        try {
          job(j);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Census Census::build(int degree, int workers) {
  check_degree_for_census(degree);
  Census c;
  c.degree_ = degree;
  c.partitions_ = origami::partitions(degree);
  const int d = degree;
  const std::uint64_t nperm = factorial(d);
  const std::uint32_t nsign = 1u << d;
  const std::uint64_t per_partition = nperm * nsign;
  const int nparts = static_cast<int>(c.partitions_.size());
  c.table_.assign(static_cast<std::size_t>(per_partition * nparts), kNoClass);

  std::vector<std::vector<OrigamiClass>> found(nparts);
  // Largest stabilizers (many short cycles) last in the partition list; start them first.
  run_parallel(nparts, workers, [&](int job) {
    const int p = nparts - 1 - job;
    const Permutation x = canonical_x(c.partitions_[p]);
    const auto stab = stabilizer_x(x);
    std::uint32_t* table = c.table_.data() + per_partition * static_cast<std::uint64_t>(p);
    auto& local = found[p];
    for (std::uint64_t yr = 0; yr < nperm; ++yr) {
      const Permutation y = Permutation::unrank(d, yr);
      if (!is_connected(x, y)) continue;
      for (std::uint32_t er = 0; er < nsign; ++er) {
        const std::uint64_t idx = yr * nsign + er;
        if (table[idx] != kNoClass) continue;
        const auto local_id = static_cast<std::uint32_t>(local.size());
        OrigamiClass cls;
        cls.partition_index = p;
        cls.x = x;
        cls.rep = {y, SignVector::from_rank(d, er)};
        enumerate_class(cls.representative(), stab, [&](const Cells& img, std::uint32_t minus) {
          const std::uint64_t at = (rank_cells(img, d) * nsign) + rank_mask(minus, d);
          if (table[at] != local_id) {
            if (table[at] != kNoClass)
              throw Error(ErrorCode::Internal, "census: restricted classes overlap");
            table[at] = local_id;
            ++cls.size;
          }
        });
        cls.abelian = is_abelian(cls.representative());
        local.push_back(std::move(cls));
      }
    }
  });

  std::vector<std::uint32_t> offset(nparts, 0);
  for (int p = 0; p < nparts; ++p) {
    offset[p] = static_cast<std::uint32_t>(c.classes_.size());
    for (auto& cls : found[p]) {
      cls.id = static_cast<std::uint32_t>(c.classes_.size());
      c.classes_.push_back(std::move(cls));
    }
  }
  for (int p = 0; p < nparts; ++p) {
    std::uint32_t* table = c.table_.data() + per_partition * static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < per_partition; ++k)
      if (table[k] != kNoClass) table[k] += offset[p];
  }
  return c;
}

Census Census::from_classes(int degree, std::vector<OrigamiClass> classes, int workers) {
  check_degree_for_census(degree);
  Census c;
  c.degree_ = degree;
  c.partitions_ = origami::partitions(degree);
  const int d = degree;
  const std::uint64_t nperm = factorial(d);
  const std::uint32_t nsign = 1u << d;
  const std::uint64_t per_partition = nperm * nsign;
  const int nparts = static_cast<int>(c.partitions_.size());
  c.table_.assign(static_cast<std::size_t>(per_partition * nparts), kNoClass);
  auto corrupt = [](const std::string& why) { return Error(ErrorCode::CacheCorrupt, "census data: " + why); };

  std::vector<std::vector<std::uint32_t>> by_partition(nparts);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    auto& cls = classes[k];
    if (cls.id != k) throw corrupt("class ids are not dense");
    const auto p = c.canonical_partition_index(cls.x);
    if (!p) throw corrupt("class " + std::to_string(k) + " has a non-canonical x");
    if (cls.rep.y.degree() != d || cls.rep.eps.degree() != d) throw corrupt("degree mismatch");
    if (!is_connected(cls.x, cls.rep.y)) throw corrupt("class " + std::to_string(k) + " is disconnected");
    if (k > 0) {
      const auto& prev = classes[k - 1];
      if (*p < prev.partition_index || (*p == prev.partition_index && !(prev.rep < cls.rep)))
        throw corrupt("classes are not in sweep order");
    }
    cls.partition_index = *p;
    by_partition[*p].push_back(static_cast<std::uint32_t>(k));
  }

  std::vector<std::string> errors(nparts);
  run_parallel(nparts, workers, [&](int p) {
    const Permutation x = canonical_x(c.partitions_[p]);
    const auto stab = stabilizer_x(x);
    std::uint32_t* table = c.table_.data() + per_partition * static_cast<std::uint64_t>(p);
    for (std::uint32_t id : by_partition[p]) {
      auto& cls = classes[id];
      std::uint64_t size = 0;
      bool rep_is_min = true;
      const std::uint64_t rep_at = cls.rep.y.rank() * nsign + cls.rep.eps.rank();
      enumerate_class(cls.representative(), stab, [&](const Cells& img, std::uint32_t minus) {
        const std::uint64_t at = rank_cells(img, d) * nsign + rank_mask(minus, d);
        if (at < rep_at) rep_is_min = false;
        if (table[at] != id) {
          if (table[at] != kNoClass) rep_is_min = false;
          table[at] = id;
          ++size;
        }
      });
      if (!rep_is_min || size != cls.size || cls.abelian != is_abelian(cls.representative())) {
        errors[p] = "class " + std::to_string(id) + " does not match its representative";
        return;
      }
    }
    for (std::uint64_t yr = 0; yr < nperm; ++yr) {
      const Permutation y = Permutation::unrank(d, yr);
      if (!is_connected(x, y)) continue;
      for (std::uint32_t er = 0; er < nsign; ++er) {
        if (table[yr * nsign + er] == kNoClass) {
          errors[p] = "connected origami missing from every class";
          return;
        }
      }
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw corrupt(e);
  c.classes_ = std::move(classes);
  return c;
}

std::size_t Census::count(bool abelian) const {
  return static_cast<std::size_t>(
      std::count_if(classes_.begin(), classes_.end(), [&](const auto& c) { return c.abelian == abelian; }));
}

std::optional<int> Census::canonical_partition_index(const Permutation& x) const {
  if (x.degree() != degree_) return std::nullopt;
  const Partition p = partition_of(x);
  const auto it = std::find(partitions_.begin(), partitions_.end(), p);
  if (it == partitions_.end() || canonical_x(p) != x) return std::nullopt;
  return static_cast<int>(it - partitions_.begin());
}

std::uint32_t Census::find_class(const Origami& o) const {
  validate(o);
  if (o.degree() != degree_)
    throw Error(ErrorCode::InvalidArgument, "find_class: origami degree " + std::to_string(o.degree()) +
                                                " does not match census degree " + std::to_string(degree_));
  const auto p = canonical_partition_index(o.x);
  if (!p) throw Error(ErrorCode::InvalidArgument, "find_class: x is not in canonical form");
  if (!is_connected(o)) throw Error(ErrorCode::Disconnected, "find_class: " + format_origami(o) + " is disconnected");
  const std::uint32_t id = table_[slot(*p, o.y, o.eps)];
  if (id == kNoClass) throw Error(ErrorCode::NotFound, "find_class: no class holds " + format_origami(o));
  return id;
}

std::uint32_t Census::find_class_any(const Origami& o) const { return find_class(canonicalize(o)); }

std::vector<ClassMember> Census::members(std::uint32_t id) const {
  const auto& cls = at(id);
  return restricted_class(cls.representative());
}

}  // namespace origami
