#include <doctest.h>

#include <optional>

#include "cwb/duality.hpp"
#include "cwb/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cwb;
using testing::all_functions;
using testing::functions_fixing;

TEST_CASE("2-maps are the continuous maps keeping X0 inside Y0") {
  const CanonicalSpace a = canonical_stone2(Algebra::with_default_names(2));
  const CanonicalSpace b = canonical_stone2(Algebra::with_default_names(1));
  const oracle::Space oa = testing::oracle_space(a.space()), ob = testing::oracle_space(b.space());
  std::vector<std::vector<std::size_t>> brute;
  for (const auto& f : all_functions(3, 1))
    if (oracle::continuous(oa, ob, f) && is_subset(oracle::image(f, a.pair().x0), b.pair().x0)) brute.push_back(f);
  CHECK(all_two_maps(a.pair(), b.pair()) == brute);

  std::vector<std::vector<std::size_t>> endo;
  for (const auto& f : all_functions(3, 3))
    if (oracle::continuous(oa, oa, f) && is_subset(oracle::image(f, a.pair().x0), a.pair().x0)) endo.push_back(f);
  CHECK(all_two_maps(a.pair(), a.pair()) == endo);
  CHECK(endo.size() == 6);
}

TEST_CASE("Da and Dt on small examples") {
  const Algebra b2 = Algebra::with_default_names(2);
  const CanonicalSpace d = da_object(b2);
  CHECK(d.space().size() == 3);
  CHECK(is_connected(d.space()));
  CHECK(da_morphism(BoolHom::identity(b2)).map == std::vector<std::size_t>{0, 1, 2});

  // swap of the atoms permutes the ultrafilter points and fixes {p,q}
  const BoolHom swap(b2, b2, {1, 0});
  CHECK(da_morphism(swap).map == std::vector<std::size_t>{1, 0, 2});

  // collapse onto one atom
  const Algebra b1 = Algebra::with_default_names(1);
  const CanonicalSpace d1 = da_object(b1);
  const TwoMap collapse{d.pair(), d1.pair(), {0, 0, 0}};
  REQUIRE(is_two_map(collapse));
  const BoolHom h = dt_morphism(collapse);
  CHECK(h.source().size() == 1);
  CHECK(h.target().size() == 2);
  CHECK(h.apply(1) == 0b11);
  CHECK(h.apply(0) == 0);

  CHECK(dt_object(d.pair()).algebra.size() == 2);
  CHECK(natural_g(Algebra()).size() == 1);
  CHECK(natural_t(da_object(Algebra()).pair()).empty());
}

TEST_CASE("duality checks over all algebras up to three atoms") {
  const Report r = verify_duality();
  REQUIRE_MESSAGE(r.passed(), r.summary());
  CHECK(r.find("naturality of t")->note == "60 cases");
}

TEST_CASE("dropping the X0 intersection in Dt is detected") {
  DualityOptions options;
  options.max_atoms = 2;
  options.dt_override = [](const TwoMap& f) { return dt_element_map(f, false); };
  const Report r = verify_duality(options);
  CHECK_FALSE(r.passed());
  const Check* bad = r.first_failure();
  REQUIRE(bad != nullptr);
  CHECK_FALSE(bad->witness.empty());
}

TEST_CASE("continuous 2-maps outside the image of Da break naturality of t") {
  const Report r = two_map_audit(2);
  CHECK(r.find("Da is faithful")->passed);
  CHECK(r.find("naturality of t holds exactly on the Da image")->passed);
  CHECK(r.find("Dt(f) depends only on f restricted to X0")->passed);
  const Check* full = r.find("every continuous 2-map is Da of a homomorphism");
  CHECK_FALSE(full->passed);
  CHECK(full->witness == "f=[0,0,2] on Da(B2)");
  const Check* nat = r.find("naturality of t over all continuous 2-maps");
  CHECK_FALSE(nat->passed);
  CHECK(nat->witness == "f=[0,0,2] on Da(B2) at x={p,q}");

  // the two continuous maps agreeing on X0 share their Dt image
  const CanonicalSpace d = da_object(Algebra::with_default_names(2));
  const TwoMap f{d.pair(), d.pair(), {0, 0, 2}}, g{d.pair(), d.pair(), {0, 0, 0}};
  CHECK(is_two_map(f));
  CHECK(is_two_map(g));
  CHECK(dt_element_map(f) == dt_element_map(g));
}

TEST_CASE("extremally connected spaces") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Report r = ecc_check(Algebra::with_default_names(n));
    REQUIRE_MESSAGE(r.passed(), r.summary());
  }
  const FiniteSpace x = dac_object(Algebra::with_default_names(2));
  CHECK(e1(x).x0 == 0b011);
  // an open map between extremally connected spaces preserves u-points
  const FiniteSpace y = dac_object(Algebra::with_default_names(1));
  const SpaceMap collapse{x, y, {0, 0, 0}};
  CHECK(is_open_map(collapse));
  CHECK(is_ecc_morphism(collapse));
  const SpaceMap to_middle{y, x, {2}};
  CHECK(is_continuous(to_middle));
  CHECK_FALSE(is_ecc_morphism(to_middle));
}

TEST_CASE("extensions of a discrete space") {
  const Algebra b2({"a", "b"});
  const Extension s = build_extension(rho_s(b2));
  CHECK(s.total().size() == 2);
  const Extension l = build_extension(rho_l(b2));
  CHECK(l.total().size() == 3);
  CHECK(extension_check(l).passed());
  CHECK(recovered_contact(l) == rho_l(b2));

  const Algebra b3({"a", "b", "c"});
  const Extension one(build_extension(PrecontactRel(b3, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}))));
  CHECK(one.total().size() == 4);

  CHECK(injective_witness(s, l).has_value());
  CHECK_FALSE(injective_witness(l, s).has_value());
  CHECK(projective_witness(l, s).has_value());
  CHECK_FALSE(projective_witness(s, l).has_value());
  CHECK(injective_witness(l, l).has_value());
  CHECK(projective_witness(l, l).has_value());

  const PrecontactRel ab(b3, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}));
  const PrecontactRel bc(b3, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}));
  const Extension eab = build_extension(ab), ebc = build_extension(bc);
  CHECK_FALSE(injective_witness(eab, ebc).has_value());
  CHECK_FALSE(injective_witness(ebc, eab).has_value());

  CHECK_THROWS_AS(build_extension(PrecontactRel(b2, BinaryRelation(2))), InputError);
}

TEST_CASE("extension posets") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto poset = extension_poset(FiniteSpace::discrete(Algebra::with_default_names(n).atoms()));
    REQUIRE_MESSAGE(poset.report.passed(), poset.report.summary());
    CHECK(poset.records.size() == (std::size_t{1} << (n * (n - 1) / 2)));
  }
  CHECK_THROWS_AS(extension_poset(FiniteSpace::discrete(FiniteSpace::default_names(5))), CapError);
}

TEST_CASE("order witnesses agree with brute force over all maps fixing the embedding") {
  const auto poset = extension_poset(FiniteSpace::discrete({"a", "b", "c"}));
  const std::size_t m = poset.records.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Extension& a = poset.records[i];
      const Extension& b = poset.records[j];
      const oracle::Space oa = testing::oracle_space(a.total()), ob = testing::oracle_space(b.total());
      bool in = false, proj = false;
      for (const auto& f : functions_fixing(a.total().size(), b.total().size(), a.embedding, b.embedding))
        in = in || oracle::embedding(oa, ob, f);
      for (const auto& f : functions_fixing(b.total().size(), a.total().size(), b.embedding, a.embedding))
        proj = proj || oracle::continuous(ob, oa, f);
      CHECK(poset.leq_in[i][j] == in);
      CHECK(poset.leq[i][j] == proj);
    }
}

TEST_CASE("maps between discrete spaces extend over gamma") {
  const FiniteSpace x = FiniteSpace::discrete({"p", "q"});
  const FiniteSpace one = FiniteSpace::discrete({"r"});
  const GammaMap c = gamma_extend_map(x, one, {0, 0});
  CHECK(c.report.passed());
  CHECK(c.map == std::vector<std::size_t>{0, 0, 0});
  const GammaMap s = gamma_extend_map(x, x, {1, 0});
  CHECK(s.map == std::vector<std::size_t>{1, 0, 2});
  const GammaMap id = gamma_extend_map(x, x, {0, 1});
  CHECK(id.map == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("maps into u-points of an extremally connected space extend over every extension") {
  const Algebra b2({"a", "b"});
  const FiniteSpace z = dac_object(Algebra::with_default_names(2));
  for (const auto& c : contact_relations(b2)) {
    const Extension ext = build_extension(c);
    for (const auto& f : all_functions(2, 2)) {
      const auto g = extend_into(ext, z, f);
      REQUIRE(g.has_value());
      CHECK(is_continuous(SpaceMap{ext.total(), z, *g}));
      for (std::size_t y = 0; y < 2; ++y) CHECK((*g)[ext.embedding[y]] == f[y]);
    }
  }
}
