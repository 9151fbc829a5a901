#pragma once

// Permutations of the cells {1..d}, sign vectors, signed permutations and
// integer partitions. Cells are labelled 1..d everywhere; negative labels
// (the rotated copies of cells) are implied by a SignVector and never stored.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace origami {

inline constexpr int kMaxCells = 16;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  // Validates that `images` (1-based values, entry k is the image of k+1) is a bijection.
  static Permutation from_images(std::span<const int> images);
  // Caller guarantees a bijection of {1..degree}.
  static Permutation unchecked(int degree, const std::uint8_t* images);

  int degree() const { return degree_; }
  int operator()(int i) const { return img_[i - 1]; }

  Permutation inverse() const;
  bool is_identity() const;

  // Cycles, each starting at its smallest cell, ordered by that cell.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;
  int cycle_count() const;
  std::vector<int> images() const;

  // Position in the lexicographic order of image sequences, 0 .. d!-1.
  std::uint64_t rank() const;
  static Permutation unrank(int degree, std::uint64_t rank);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxCells> img_{};
};

class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int degree) : degree_(static_cast<std::uint8_t>(degree)) {}

  // Bit (i-1) of `minus_mask` set means cell i carries -1.
  static SignVector from_mask(int degree, std::uint32_t minus_mask);
  // Inverse of rank().
  static SignVector from_rank(int degree, std::uint32_t rank);

  int degree() const { return degree_; }
  int operator()(int i) const { return (minus_ >> (i - 1)) & 1u ? -1 : 1; }
  void set(int i, int sign);

  std::uint32_t minus_mask() const { return minus_; }
  // Lexicographic position with + < -, cell 1 most significant.
  std::uint32_t rank() const;
  bool all_plus() const { return minus_ == 0; }

  SignVector operator-() const;
  friend SignVector operator*(const SignVector& a, const SignVector& b);
  // i -> self(p(i))
  SignVector after(const Permutation& p) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.rank() <=> b.rank();
  }

 private:
  std::uint8_t degree_ = 0;
  std::uint32_t minus_ = 0;
};

// An odd permutation of ±{1..d}: sigma(i) = sign(i) * base(i) for i > 0 and
// sigma(-i) = -sigma(i).
struct SignedPermutation {
  Permutation base;
  SignVector sign;

  int degree() const { return base.degree(); }
  int operator()(int i) const {
    return i > 0 ? sign(i) * base(i) : -(sign(-i) * base(-i));
  }
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

struct Partition {
  std::vector<int> parts;  // non-increasing, positive

  int total() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

// i -> a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
// t ∘ s ∘ t^-1
Permutation conjugate(const Permutation& t, const Permutation& s);

// i -> x(i) where e(i) = +1, x^-1(i) where e(i) = -1. Empty when that map is
// not a bijection. If every i has e(i) == e(x(i)) or x(x(i)) == i the map is a
// bijection with inverse twisted_power(x, -e); the converse fails, e.g.
// x = (1,2,3,4), e = +-+-.
std::optional<Permutation> twisted_power(const Permutation& x, const SignVector& e);

// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1,...,1).
std::vector<Partition> partitions(int d);
Partition partition_of(const Permutation& p);
// (1 .. j1)(j1+1 .. j1+j2)...
Permutation canonical_x(const Partition& p);
// Relabelling t with t∘x∘t^-1 == canonical_x(partition_of(x)). Cycles are taken
// by (length desc, smallest cell asc) and relabelled blockwise, each cycle
// starting from its smallest cell.
Permutation canonicalizing_conjugator(const Permutation& x);

std::uint64_t factorial(int n);

// Text forms: "(1,2,3)(4)" and "+-+".
std::string format_cycles(const Permutation& p);
Permutation parse_cycles(std::string_view text, int degree);
std::string format_signs(const SignVector& e);
SignVector parse_signs(std::string_view text);
std::string format_partition(const Partition& p);

}  // namespace origami
