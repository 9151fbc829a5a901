#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "origami/classifier.hpp"
#include "origami/error.hpp"

using namespace origami;

namespace {

std::vector<Origami> connected_with_canonical_x(int d) {
  std::vector<Origami> out;
  for (const auto& p : partitions(d)) {
    const Permutation x = canonical_x(p);
    for (std::uint64_t r = 0; r < factorial(d); ++r) {
      const Permutation y = Permutation::unrank(d, r);
      if (!is_connected(x, y)) continue;
      for (std::uint32_t e = 0; e < (1u << d); ++e) out.push_back({x, y, SignVector::from_rank(d, e)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("stabilizer sizes agree with a brute-force count") {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& p : partitions(d)) {
      const Permutation x = canonical_x(p);
      const auto stab = stabilizer_x(x);
      CAPTURE(format_partition(p));
      CHECK(static_cast<long>(stab.size()) == oracle::brute_stabilizer_size(x));
      std::set<std::pair<std::vector<int>, std::uint32_t>> distinct;
      for (const auto& s : stab) distinct.insert({s.base.images(), s.sign.minus_mask()});
      CHECK(distinct.size() == stab.size());
    }
  }
  CHECK(stabilizer_x(canonical_x({{2, 2}})).size() == 32);
  CHECK(stabilizer_x(canonical_x({{4}})).size() == 8);
  CHECK(stabilizer_x(canonical_x({{1}})).size() == 2);
}

TEST_CASE("cycle-sign search matches the exhaustive sign loop up to degree 5") {
  for (int d = 1; d <= 5; ++d) {
    const Census c = Census::build(d);
    for (const auto& cls : c.classes()) {
      const auto stab = stabilizer_x(cls.x);
      const auto fast = restricted_class(cls.representative(), stab);
      const auto slow = restricted_class_exhaustive(cls.representative(), stab);
      CAPTURE(format_origami(cls.representative()));
      REQUIRE(fast == slow);
      CHECK(fast.size() == cls.size);
      CHECK(fast.front() == cls.rep);
    }
  }
}

TEST_CASE("class relation equals the four-condition brute force up to degree 3") {
  for (int d = 1; d <= 3; ++d) {
    const Census c = Census::build(d);
    const auto all = connected_with_canonical_x(d);
    for (const auto& a : all) {
      const auto ta = oracle::from(a);
      const auto ida = c.find_class(a);
      for (const auto& b : all) {
        if (a.x != b.x) continue;
        const bool same = ida == c.find_class(b);
        CHECK(oracle::lemma_isomorphic(ta, oracle::from(b)) == same);
        CHECK(oracle::cover_isomorphic(ta, oracle::from(b)) == same);
      }
    }
  }
}

TEST_CASE("classes at degree 4 are cover-isomorphic inside and distinct across") {
  const Census c = Census::build(4);
  for (const auto& cls : c.classes()) {
    const auto rep = oracle::from(cls.representative());
    for (const auto& m : c.members(cls.id))
      CHECK(oracle::cover_isomorphic(rep, oracle::from(Origami{cls.x, m.y, m.eps})));
  }
  for (const auto& a : c.classes())
    for (const auto& b : c.classes())
      if (a.id < b.id && a.x == b.x)
        CHECK_FALSE(oracle::cover_isomorphic(oracle::from(a.representative()), oracle::from(b.representative())));
}

TEST_CASE("census counts of connected classes") {
  const int abelian[] = {1, 3, 7, 26, 91};
  const int nonabelian[] = {0, 1, 4, 34, 227};
  for (int d = 1; d <= 5; ++d) {
    const Census c = Census::build(d);
    CAPTURE(d);
    CHECK(c.count(true) == abelian[d - 1]);
    CHECK(c.count(false) == nonabelian[d - 1]);
  }
}

TEST_CASE("class sizes add up to the connected sweep") {
  for (int d = 1; d <= 5; ++d) {
    const Census c = Census::build(d);
    std::uint64_t total = 0;
    for (const auto& cls : c.classes()) total += cls.size;
    CHECK(total == connected_with_canonical_x(d).size());
  }
}

TEST_CASE("representatives are the smallest members and ids follow the sweep") {
  const Census c = Census::build(4);
  for (const auto& cls : c.classes()) {
    CHECK(cls.x == canonical_x(c.partitions()[cls.partition_index]));
    CHECK(c.members(cls.id).front() == cls.rep);
    CHECK(c.find_class(cls.representative()) == cls.id);
    if (cls.id > 0) {
      const auto& prev = c.at(cls.id - 1);
      CHECK((prev.partition_index < cls.partition_index ||
             (prev.partition_index == cls.partition_index && prev.rep < cls.rep)));
    }
  }
}

TEST_CASE("census does not depend on the worker count") {
  const Census one = Census::build(5, 1);
  const Census many = Census::build(5, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one.classes()[k].rep == many.classes()[k].rep);
    CHECK(one.classes()[k].size == many.classes()[k].size);
  }
}

TEST_CASE("class membership is invariant under the abelian flag") {
  const Census c = Census::build(4);
  for (const auto& cls : c.classes())
    for (const auto& m : c.members(cls.id)) CHECK(is_abelian({cls.x, m.y, m.eps}) == cls.abelian);
}

TEST_CASE("degree one and two") {
  const Census c1 = Census::build(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1.at(0).size == 2);
  CHECK(c1.find_class(parse_origami("x=(1); y=(1); eps=-")) == 0);

  const Census c2 = Census::build(2);
  const auto pillow = parse_origami("x=(1,2); y=(1,2); eps=+-");
  const auto id = c2.find_class(pillow);
  CHECK_FALSE(c2.at(id).abelian);
  CHECK(c2.count(false) == 1);
}

TEST_CASE("lookup errors") {
  const Census c = Census::build(3);
  CHECK_THROWS_AS(c.find_class(parse_origami("x=(1,2)(3); y=(1)(2)(3); eps=+++")), Error);
  try {
    c.find_class(parse_origami("x=(1,2)(3); y=(1)(2)(3); eps=+++"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  try {
    c.find_class(parse_origami("x=(1)(2,3); y=(1,2); eps=+++"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  const auto o = parse_origami("x=(1)(2,3); y=(1,2); eps=+-+");
  const auto id = c.find_class_any(o);
  CHECK(oracle::cover_isomorphic(oracle::from(o), oracle::from(c.at(id).representative())));
  try {
    (void)Census::build(12);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Resource);
  }
}

TEST_CASE("rebuilding from stored representatives") {
  const Census c = Census::build(4);
  auto classes = c.classes();
  const Census back = Census::from_classes(4, classes, 2);
  CHECK(back.size() == c.size());
  CHECK(back.find_class(c.at(17).representative()) == 17);

  auto wrong_size = classes;
  wrong_size[5].size += 1;
  CHECK_THROWS_AS(Census::from_classes(4, wrong_size), Error);

  auto missing = classes;
  missing.pop_back();
  CHECK_THROWS_AS(Census::from_classes(4, missing), Error);

  auto duplicated = classes;
  duplicated[3].rep = c.members(duplicated[2].id).back();
  CHECK_THROWS_AS(Census::from_classes(4, duplicated), Error);
}
