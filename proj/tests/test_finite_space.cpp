#include <doctest.h>

#include <algorithm>

#include "cwb/error.hpp"
#include "cwb/finite_space.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cwb;

namespace {

/// Sierpinski-like three-point space: x2 in the closure of x0 and x1.
FiniteSpace vee() { return FiniteSpace::generate({"a", "b", "c"}, {0b101, 0b110}); }

std::vector<PointSet> sorted(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// All spaces on n points generated by up to two base members.
template <class Fn>
void small_spaces(std::size_t n, Fn&& fn) {
  const PointSet all = full_mask<PointSet>(n);
  for (PointSet a = 0; a <= all; ++a)
    for (PointSet b = a; b <= all; ++b)
      fn(FiniteSpace::generate(FiniteSpace::default_names(n), {a, b}), std::vector<PointSet>{a, b});
}

}  // namespace

TEST_CASE("closed sets match the lattice generated by the base") {
  for (std::size_t n = 0; n <= 4; ++n)
    small_spaces(n, [&](const FiniteSpace& x, const std::vector<PointSet>& base) {
      const auto lattice = oracle::closed_lattice(n, base);
      REQUIRE(sorted(x.closed_sets()) == sorted(lattice));
      const oracle::Space o{n, lattice};
      for (PointSet s = 0; s <= x.full(); ++s) {
        CHECK(x.closure(s) == o.closure(s));
        CHECK(x.interior(s) == o.interior(s));
      }
      CHECK(is_T0(x) == oracle::t0(o));
      CHECK(is_connected(x) == oracle::connected(o));
      CHECK(sorted(x.open_sets()) == sorted(o.open_sets()));
    });
}

TEST_CASE("closed and open families are shortlex ordered") {
  const auto c = vee().closed_sets();
  CHECK(std::is_sorted(c.begin(), c.end(), shortlex_less<PointSet>));
  CHECK(c.front() == 0);
  CHECK(c.back() == 0b111);
}

TEST_CASE("specialization") {
  const FiniteSpace x = vee();
  CHECK(x.point_closure(0) == 0b101);
  CHECK(x.below(2, 0));
  CHECK_FALSE(x.below(0, 2));
  CHECK(x.point_open(2) == 0b111);
  CHECK(x.point_open(0) == 0b001);
  CHECK(is_T0(x));
  CHECK(is_connected(x));
  CHECK_FALSE(is_discrete(x));
  CHECK(is_discrete(FiniteSpace::discrete({"u", "v"})));
  CHECK_FALSE(is_T0(FiniteSpace::indiscrete({"u", "v"})));
  CHECK(is_compact(x));
  CHECK(is_hausdorff(FiniteSpace::discrete({"u"})));
  CHECK_THROWS_AS(FiniteSpace::generate({"u", "u"}, {}), InputError);
}

TEST_CASE("regular closed algebra matches the literal oracle") {
  for (std::size_t n = 1; n <= 4; ++n)
    small_spaces(n, [&](const FiniteSpace& x, const std::vector<PointSet>& base) {
      const oracle::Space o = oracle::space_from_base(n, base);
      const RegionAlgebra rc = regular_closed(x);
      std::vector<PointSet> lib;
      for (AtomSet a = 0; a < rc.algebra.element_count(); ++a) lib.push_back(rc.region(a));
      REQUIRE(sorted(lib) == sorted(oracle::regular_closed(o)));
      CHECK(regular_closed_check(x).passed());
      CHECK(de_vries_check(x).passed() == oracle::de_vries(o));
      CHECK(u_points(x) == oracle::u_points(o));
      CHECK(u_points(x) == u_points_via_sigma(x));
    });
}

TEST_CASE("clopen algebra atoms are components") {
  const FiniteSpace two = FiniteSpace::generate({"a", "b", "c", "d"}, {0b0011, 0b1100, 0b0001, 0b0100});
  CHECK(components(two, two.full()) == std::vector<PointSet>{0b0011, 0b1100});
  const RegionAlgebra co = clopen_algebra(two);
  CHECK(co.algebra.size() == 2);
  CHECK(co.element_of(0b0011).has_value());
  CHECK_FALSE(co.element_of(0b0001).has_value());
}

TEST_CASE("RC(X,X0) needs a dense X0") {
  const FiniteSpace x = vee();
  const TopPair pair{x, 0b011};
  const RegionAlgebra rc = rc_pair(pair);
  CHECK(rc.algebra.size() == 2);
  CHECK(rc.atom_regions == std::vector<PointSet>{0b101, 0b110});
  CHECK_THROWS_AS(rc_pair(TopPair{x, 0b100}), InputError);
  CHECK(restriction_extension_check(pair).passed());
  const PrecontactRel d = delta_pair(pair);
  CHECK(d.holds(0b01, 0b10));
}

TEST_CASE("continuity and openness agree with the literal definitions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<FiniteSpace> spaces;
    small_spaces(n, [&](const FiniteSpace& x, const std::vector<PointSet>&) { spaces.push_back(x); });
    for (const auto& x : spaces)
      for (const auto& y : spaces) {
        const oracle::Space ox = testing::oracle_space(x), oy = testing::oracle_space(y);
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= n;
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<std::size_t> f(n);
          std::size_t c = code;
          for (std::size_t i = 0; i < n; ++i, c /= n) f[i] = c % n;
          const SpaceMap m{x, y, f};
          REQUIRE(is_continuous(m) == oracle::continuous(ox, oy, f));
          CHECK(is_continuous(m) == is_continuous_by_closed_sets(m));
          CHECK(is_open_map(m) == is_open_map_by_open_sets(m));
          CHECK(is_embedding(m) == oracle::embedding(ox, oy, f));
        }
      }
  }
}

TEST_CASE("subspace topology") {
  const FiniteSpace x = vee();
  const FiniteSpace s = subspace(x, 0b011);
  CHECK(s.names() == std::vector<std::string>{"a", "b"});
  CHECK(is_discrete(s));
  CHECK(subspace(x, 0b101).point_closure(0) == 0b11);
}

TEST_CASE("u-points, C-semiregularity and extremal connectedness") {
  const FiniteSpace x = vee();
  CHECK(u_points(x) == 0b011);
  CHECK(is_C_semiregular(x));
  CHECK(is_extremally_connected(x));
  const FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  CHECK(is_C_semiregular(d));
  CHECK_FALSE(is_extremally_connected(d));
  CHECK(is_semiregular(x));
  CHECK(is_extremally_disconnected(d));
}

TEST_CASE("point traces") {
  const FiniteSpace x = vee();
  const RegionAlgebra rc = regular_closed(x);
  CHECK(popcount(sigma(rc, 2)) == 2);
  CHECK(popcount(sigma(rc, 0)) == 1);
  const auto n0 = nu(x, rc, 0);
  CHECK(std::find(n0.begin(), n0.end(), rc.element_of(0b101).value()) != n0.end());
  const TopPair pair{x, 0b011};
  CHECK(popcount(gamma(pair, 2)) == 2);
  CHECK(u_trace(x, 2) == 1);
}
