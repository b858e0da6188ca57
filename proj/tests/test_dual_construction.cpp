#include <doctest.h>

#include <random>

#include "cwb/dual_construction.hpp"
#include "cwb/error.hpp"
#include "cwb/points.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cwb;
using testing::rel_from_core;

TEST_CASE("canonical spaces of B2") {
  const Algebra b2({"p", "q"});
  const CanonicalSpace l = canonical_2pcs(rho_l(b2));
  CHECK(l.space().names() == std::vector<std::string>{"{p}", "{q}", "{p,q}"});
  CHECK(l.pair().x0 == 0b011);
  CHECK(l.g(0b01) == 0b101);
  CHECK(l.space().below(2, 0));
  CHECK(is_connected(l.space()));
  CHECK(l.pcs.r.pair_count() == 4);

  const CanonicalSpace s = canonical_2pcs(rho_s(b2));
  CHECK(s.space().size() == 2);
  CHECK(is_discrete(s.space()));

  CHECK_THROWS_AS(canonical_2cs(PrecontactRel(b2, BinaryRelation(2))), InputError);
  CHECK(canonical_stone2(b2).space() == l.space());
  CHECK(canonical_stone2(Algebra()).space().size() == 0);
}

TEST_CASE("canonical space axioms") {
  const Algebra b3 = Algebra::with_default_names(3);
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const PrecontactRel rel = rel_from_core(b3, oracle::core_from_bits(3, bits));
    const CanonicalSpace cs = canonical_2pcs(rel);
    REQUIRE_MESSAGE(check_pcs(cs.pcs).passed(), check_pcs(cs.pcs).summary());
    if (is_contact(rel)) CHECK(check_cs(cs.pair()).passed());
  }
  CHECK(check_s2s(canonical_stone2(b3).pair()).passed());
  // the clan space of rho_s is not a Stone 2-space: grills are missing
  CHECK_FALSE(check_s2s(canonical_2cs(rho_s(b3)).pair()).passed());
}

TEST_CASE("PCS axioms detect broken inputs") {
  const FiniteSpace x = FiniteSpace::generate({"a", "b", "c"}, {0b101, 0b110});
  // X0 not dense
  TwoPCS bad{TopPair{x, 0b001}, BinaryRelation(3)};
  CHECK_FALSE(check_pcs(bad).passed());
  // c lies in cl{a} and cl{b}, so a and b must be related
  TwoPCS apart{TopPair{x, 0b011}, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}})};
  CHECK_FALSE(check_pcs(apart).passed());
  TwoPCS ok{TopPair{x, 0b011}, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}, {0, 1}, {1, 0}})};
  CHECK(check_pcs(ok).passed());
  CHECK(space_round_trip(ok).passed());
}

TEST_CASE("canonical algebra of a canonical space is the original algebra") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const PrecontactRel rel = rel_from_core(Algebra::with_default_names(3), oracle::random_core(3, rng));
    const CanonicalSpace cs = canonical_2pcs(rel);
    const CanonicalAlgebra ca = canonical_algebra_of_2pcs(cs.pcs);
    CHECK(pca_isomorphism(rel, ca.rel).has_value());
    const CanonicalAlgebra cc = canonical_algebra_of_2cs(cs.pair());
    CHECK(pca_isomorphism(sharp(rel), cc.rel).has_value());
  }
}

TEST_CASE("representation checks pass on every 3-atom precontact algebra") {
  const Algebra b3 = Algebra::with_default_names(3);
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const PrecontactRel rel = rel_from_core(b3, oracle::core_from_bits(3, bits));
    const Report r = verify_theorem(rel);
    REQUIRE_MESSAGE(r.passed(), r.summary());
  }
}

TEST_CASE("derived relation of a 2-contact space") {
  const Algebra b3 = Algebra::with_default_names(3);
  for (const auto& c : contact_relations(b3)) {
    const CanonicalSpace cs = canonical_2cs(c);
    const BinaryRelation r = derived_relation_of_2cs(cs.pair());
    CHECK(r == cs.pcs.r);
    CHECK(derived_relation_uniqueness(cs.pair()).passed());
  }
}

TEST_CASE("isomorphism search") {
  const Algebra b3 = Algebra::with_default_names(3);
  const PrecontactRel a(b3, BinaryRelation::from_pairs(3, {{0, 1}}));
  const PrecontactRel b(b3, BinaryRelation::from_pairs(3, {{2, 0}}));
  const PrecontactRel c(b3, BinaryRelation::from_pairs(3, {{0, 0}}));
  const auto w = pca_isomorphism(a, b);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 2);
  CHECK((*w)[1] == 0);
  CHECK_FALSE(pca_isomorphism(a, c).has_value());
  CHECK(pcs_isomorphism(canonical_2pcs(a).pcs, canonical_2pcs(b).pcs).has_value());
  CHECK_FALSE(pcs_isomorphism(canonical_2pcs(a).pcs, canonical_2pcs(c).pcs).has_value());
  CHECK_THROWS_AS(pca_isomorphism(rho_l(Algebra::with_default_names(9)), rho_l(Algebra::with_default_names(9))),
                  CapError);
}

TEST_CASE("representation oracle: g onto RC(X,X0) preserves contact") {
  // independent recomputation of g, closures, and both contact relations
  const std::size_t n = 3;
  const Algebra alg = Algebra::with_default_names(n);
  for (std::uint64_t bits = 0; bits < 512; bits += 5) {
    const auto core = oracle::core_from_bits(n, bits);
    const auto t = oracle::table_from_core(n, core);
    const PrecontactRel rel = rel_from_core(alg, core);
    const CanonicalSpace cs = canonical_2pcs(rel);
    const std::size_t pts = cs.points.size();
    std::vector<PointSet> base;
    for (AtomSet a = 0; a < 8; ++a) base.push_back(cs.g(a));
    REQUIRE(oracle::union_closed(base));
    const auto closure = [&](PointSet s) { return oracle::closure_in_base(pts, base, s); };
    for (AtomSet a = 0; a < 8; ++a) {
      // g(a) is the closure of its ultrafilter points
      CHECK(closure(cs.g(a) & cs.pair().x0) == cs.g(a));
      for (AtomSet b = 0; b < 8; ++b) {
        bool cs_contact = false;
        for (std::size_t x = 0; x < pts; ++x)
          for (std::size_t y = 0; y < pts; ++y)
            if (has(cs.g(a) & cs.pair().x0, x) && has(cs.g(b) & cs.pair().x0, y) && cs.pcs.r.contains(x, y))
              cs_contact = true;
        CHECK(cs_contact == t[a][b]);
        CHECK(((cs.g(a) & cs.g(b)) != 0) == oracle::sharp(t)[a][b]);
      }
    }
  }
}
