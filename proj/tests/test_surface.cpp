#include "doctest.h"
#include "origami/classifier.hpp"
#include "origami/error.hpp"
#include "origami/surface.hpp"

using namespace origami;

namespace {

template <class F>
void for_each_origami(int d, bool connected_only, F&& f) {
  for (std::uint64_t rx = 0; rx < factorial(d); ++rx) {
    const auto x = Permutation::unrank(d, rx);
    for (std::uint64_t ry = 0; ry < factorial(d); ++ry) {
      const auto y = Permutation::unrank(d, ry);
      if (connected_only && !is_connected(x, y)) continue;
      for (std::uint32_t m = 0; m < (1u << d); ++m) f(Origami{x, y, SignVector::from_mask(d, m)});
    }
  }
}

}  // namespace

TEST_CASE("double cover examples") {
  const auto pillow = parse_origami("x=(1,2); y=(1,2); eps=+-");
  const auto c = double_cover(pillow);
  CHECK(format_cover_cycles(c.xhat) == "(1,2)(-1,-2)");
  CHECK(format_cover_cycles(c.yhat) == "(1,-2)(-1,2)");
  CHECK(cover_orbits(c).size() == 1);
  CHECK_FALSE(is_abelian(pillow));

  const auto minus = parse_origami("x=(1); y=(1); eps=-");
  const auto m = double_cover(minus);
  CHECK(m.xhat == CoverPermutation(1));
  CHECK(m.yhat == CoverPermutation(1));
  CHECK(is_abelian(minus));

  const auto plus = parse_origami("x=(1,2,3); y=(1,3); eps=+++");
  const auto p = double_cover(plus);
  for (int i = 1; i <= 3; ++i) CHECK(p.yhat(i) == plus.y(i));
  CHECK(cover_orbits(p).size() == 2);
  CHECK(is_abelian(plus));
}

TEST_CASE("restore examples") {
  const auto [y0, e0] = restore(CoverPermutation(3));
  CHECK(y0.is_identity());
  CHECK(e0.all_plus());
  const auto pillow = double_cover(parse_origami("x=(1,2); y=(1,2); eps=+-"));
  const auto [y, e] = restore(pillow.yhat);
  CHECK(format_cycles(y) == "(1,2)");
  CHECK(cover_of_y(y, e) == pillow.yhat);

  CoverPermutation bad(2);
  bad.set(1, 2);
  bad.set(2, 1);
  CHECK_THROWS_AS(restore(bad), Error);
}

TEST_CASE("cover structure for every origami up to degree 4") {
  for (int d = 1; d <= 4; ++d) {
    for_each_origami(d, false, [&](const Origami& o) {
      const auto c = double_cover(o);
      CHECK(c.xhat.is_bijective());
      CHECK(c.yhat.is_bijective());
      for (int i = 1; i <= d; ++i) {
        CHECK(c.xhat(i) == o.x(i));
        CHECK(c.xhat(-i) == -c.xhat.inverse()(i));
        CHECK(c.yhat(-i) == -c.yhat.inverse()(i));
        const int b = o.eps(i) > 0 ? o.y(i) : o.y.inverse()(i);
        CHECK(c.yhat(i) == o.eps(i) * o.eps(b) * b);
      }
      const auto [y, e] = restore(c.yhat);
      CHECK(cover_of_y(y, e) == c.yhat);
      if (o.eps.all_plus()) CHECK(y == o.y);
      if (!is_connected(o)) {
        CHECK_THROWS_AS(is_abelian(o), Error);
        return;
      }
      const auto orbits = cover_orbits(c);
      CHECK(orbits.size() == (is_abelian(o) ? 2u : 1u));
      for (const auto& orb : orbits) CHECK(orb.size() == (orbits.size() == 2 ? std::size_t(d) : std::size_t(2 * d)));
      if (o.eps.all_plus()) CHECK(is_abelian(o));
    });
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(parse_origami("x=(1); y=(1); eps=+")));
  for (std::uint32_t m = 0; m < 16; ++m) {
    Origami o = parse_origami("x=(1,2)(3,4); y=(1)(2)(3)(4); eps=++++");
    o.eps = SignVector::from_mask(4, m);
    CHECK_FALSE(is_connected(o));
  }
  const auto x = parse_cycles("(1,2,3,4,5,6)", 6);
  for (std::uint64_t r = 0; r < 720; r += 37) CHECK(is_connected(x, Permutation::unrank(6, r)));
}

TEST_CASE("abelian flag is constant on classes") {
  for (int d = 1; d <= 4; ++d) {
    const Census c = Census::build(d);
    for (const auto& cls : c.classes())
      for (const auto& m : c.members(cls.id)) CHECK(is_abelian(Origami{cls.x, m.y, m.eps}) == cls.abelian);
  }
}

TEST_CASE("origami text form") {
  const auto o = parse_origami("x=(1,2,3)(4); y=(1,4); eps=+--+");
  CHECK(o.degree() == 4);
  CHECK(format_origami(o) == "x=(1,2,3)(4); y=(1,4)(2)(3); eps=+--+");
  CHECK(parse_origami(format_origami(o)) == o);
  CHECK_THROWS_AS(parse_origami("x=(1,2); y=(1,2)"), Error);
  CHECK_THROWS_AS(parse_origami("x=(1,5); y=(1); eps=++"), Error);
  CHECK_THROWS_AS(validate(Origami{Permutation(2), Permutation(3), SignVector(2)}), Error);
}
