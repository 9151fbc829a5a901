#pragma once

// Isomorphism classes of origamis with a fixed horizontal permutation x
// ("restricted classes") and the census of all connected classes of a degree.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "origami/perm.hpp"
#include "origami/surface.hpp"

namespace origami {

inline constexpr std::uint32_t kNoClass = 0xffffffffu;

// A (y, eps) pair sharing the class's x. Ordered by y's image sequence, then
// eps with + < -.
struct ClassMember {
  Permutation y;
  SignVector eps;

  friend bool operator==(const ClassMember&, const ClassMember&) = default;
  friend auto operator<=>(const ClassMember&, const ClassMember&) = default;
};

struct OrigamiClass {
  std::uint32_t id = 0;
  int partition_index = 0;
  Permutation x;       // canonical form for the partition
  ClassMember rep;     // smallest member
  std::uint64_t size = 0;
  bool abelian = false;

  Origami representative() const { return {x, rep.y, rep.eps}; }
};

// Odd signed permutations sigma with sign constant on every x-cycle and
// base ∘ x^sign ∘ base^-1 = x. Built cycle by cycle: a target cycle of the same
// length, a rotation offset and a sign for each cycle of x.
std::vector<SignedPermutation> stabilizer_x(const Permutation& x);

// All (y', eps') with (x, y', eps') isomorphic to o, sorted. For each sigma in
// Stab(x) the admissible eps' are exactly those making the exponent
// eps · (eps'∘base) · sign constant on every cycle of y, so the loop runs over
// 2^(cycles of y) choices instead of all 2^d sign vectors.
std::vector<ClassMember> restricted_class(const Origami& o);
std::vector<ClassMember> restricted_class(const Origami& o, std::span<const SignedPermutation> stab);
// Same set, computed by trying every eps' and testing the twisted-power and
// sign conditions directly.
std::vector<ClassMember> restricted_class_exhaustive(const Origami& o,
                                                     std::span<const SignedPermutation> stab);

// Conjugates x into canonical form (see canonicalizing_conjugator), carrying y
// and eps along. The result is isomorphic to o.
Origami canonicalize(const Origami& o);

class Census {
 public:
  // Sweeps every partition, every y in lexicographic order and every eps with
  // + < -, skipping disconnected (x, y). Class ids follow discovery order;
  // partitions are swept on up to `workers` threads and merged in order, so the
  // result does not depend on the worker count.
  static Census build(int degree, int workers = 1);

  // Rebuilds a census from stored class representatives (ids must be dense
  // and in order). Throws Error(CacheCorrupt) if the stored data is not a
  // consistent census.
  static Census from_classes(int degree, std::vector<OrigamiClass> classes, int workers = 1);

  // Bytes needed by the member lookup table.
  static std::uint64_t table_bytes(int degree);

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<OrigamiClass>& classes() const { return classes_; }
  const OrigamiClass& at(std::uint32_t id) const { return classes_.at(id); }
  std::size_t size() const { return classes_.size(); }
  std::size_t count(bool abelian) const;

  // Index of x's partition if x is in canonical form.
  std::optional<int> canonical_partition_index(const Permutation& x) const;

  // Class of o, whose x must already be canonical. Throws Error(Disconnected)
  // for a disconnected o and Error(InvalidArgument) for a non-canonical x or a
  // degree mismatch.
  std::uint32_t find_class(const Origami& o) const;
  // Canonicalizes x first.
  std::uint32_t find_class_any(const Origami& o) const;

  std::vector<ClassMember> members(std::uint32_t id) const;

 private:
  std::size_t slot(int partition_index, const Permutation& y, const SignVector& eps) const;

  int degree_ = 0;
  std::vector<Partition> partitions_;
  std::vector<OrigamiClass> classes_;
  std::vector<std::uint32_t> table_;  // (partition, rank y, rank eps) -> class id
};

}  // namespace origami
