#include <doctest.h>

#include <cstdlib>

#include "cwb/error.hpp"
#include "cwb/precontact.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cwb;
using testing::oracle_table;
using testing::rel_from_core;

TEST_CASE("core semantics match the element table oracle") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Algebra alg = Algebra::with_default_names(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto core = oracle::core_from_bits(n, bits);
      const PrecontactRel rel = rel_from_core(alg, core);
      const auto t = oracle::table_from_core(n, core);
      CHECK(rel.table() == testing::table_of(alg, t));
      for (AtomSet a = 0; a < alg.element_count(); ++a)
        for (AtomSet b = 0; b < alg.element_count(); ++b) REQUIRE(rel.holds(a, b) == t[a][b]);
    }
  }
}

TEST_CASE("axiom verdicts agree with the literal oracle on all 3-atom relations") {
  const Algebra alg = Algebra::with_default_names(3);
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const auto t = oracle::table_from_core(3, oracle::core_from_bits(3, bits));
    const Report r = check_axioms(testing::table_of(alg, t));
    CHECK(r.find("C0")->passed);
    CHECK(r.find("C+")->passed);
    CHECK(r.find("Cref")->passed == oracle::c_ref(t));
    CHECK(r.find("Csym")->passed == oracle::c_sym(t));
    CHECK(r.find("Ctr")->passed == oracle::c_tr(t));
    CHECK(r.find("Ccon")->passed == oracle::c_con(t));
    CHECK(r.find("Ctr#")->passed == oracle::c_tr(oracle::sharp(t)));
  }
}

TEST_CASE("tables outside C0/C+ are caught with a witness") {
  const Algebra b2({"p", "q"});
  RelationTable t(b2);
  t.set(0b01, 0b01);  // {p} C {p} but not {p} C {p,q}
  const Report r = check_axioms(t);
  CHECK(r.find("C0")->passed);
  CHECK_FALSE(r.find("C+")->passed);
  CHECK_FALSE(r.find("C+")->witness.empty());
  CHECK_FALSE(is_precontact(t));
  CHECK_THROWS_AS(from_table(t), InputError);

  RelationTable z(b2);
  z.set(0, 0b01);
  CHECK_FALSE(check_axioms(z).find("C0")->passed);
}

TEST_CASE("from_table recovers the atom core of every precontact table") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const Algebra alg = Algebra::with_default_names(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const PrecontactRel rel = rel_from_core(alg, oracle::core_from_bits(n, bits));
      CHECK(from_table(rel.table()) == rel);
    }
  }
}

TEST_CASE("every table satisfying C0 and C+ on two atoms comes from a core") {
  // brute force over all 2^16 element tables of B2
  const Algebra b2({"p", "q"});
  std::size_t precontact = 0, contact = 0;
  for (std::uint32_t bits = 0; bits < (1U << 16); ++bits) {
    oracle::Table t(4, std::vector<bool>(4, false));
    for (std::size_t i = 0; i < 16; ++i) t[i / 4][i % 4] = ((bits >> i) & 1U) != 0;
    if (!oracle::c0(t) || !oracle::c_plus(t)) continue;
    ++precontact;
    if (oracle::is_contact(t)) ++contact;
    const auto lib = testing::table_of(b2, t);
    CHECK(is_precontact(lib));
    CHECK(from_table(lib).table() == lib);
  }
  CHECK(precontact == 16);
  CHECK(contact == 2);
}

TEST_CASE("C# is the least contact relation containing C and overlap") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const Algebra alg = Algebra::with_default_names(3);
    const PrecontactRel rel = rel_from_core(alg, oracle::core_from_bits(3, bits));
    const PrecontactRel s = sharp(rel);
    const auto expected = oracle::sharp(oracle_table(rel));
    CHECK(s.table() == testing::table_of(alg, expected));
    CHECK(is_contact(s));
  }
}

TEST_CASE("way-below is the complement of contact with the complement") {
  const Algebra b3({"p", "q", "r"});
  const PrecontactRel chain(b3, BinaryRelation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}}));
  CHECK(way_below(chain, 0b100, 0b100));
  CHECK_FALSE(way_below(chain, 0b001, 0b001));
  CHECK(way_below(chain, 0b001, 0b011));
  CHECK(way_below(chain, Element(b3, 0), Element(b3, 0)));
}

TEST_CASE("extremal relations") {
  const Algebra b3({"p", "q", "r"});
  const auto s = oracle_table(rho_s(b3));
  const auto l = oracle_table(rho_l(b3));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      CHECK(s[a][b] == ((a & b) != 0));
      CHECK(l[a][b] == (a != 0 && b != 0));
    }
  CHECK(is_contact(rho_s(b3)));
  CHECK(is_contact(rho_l(b3)));
  // every contact relation sits between them
  for (const auto& c : contact_relations(b3)) {
    CHECK(rho_s(b3).core().subset_of(c.core()));
    CHECK(c.core().subset_of(rho_l(b3).core()));
  }
}

TEST_CASE("adjacency spaces: C_R inherits properties of R") {
  const PrecontactRel grid = adjacency_contact({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"},
                                                                 {"b", "a"}, {"b", "c"}, {"c", "b"}});
  const Report r = check_axioms(grid);
  CHECK(r.find("Cref")->passed);
  CHECK(r.find("Csym")->passed);
  CHECK(r.find("Ccon")->passed);
  CHECK_FALSE(r.find("Ctr")->passed);
  CHECK_THROWS_AS(adjacency_contact({"a"}, {{"a", "z"}}), InputError);

  // transitive R gives Ctr
  const PrecontactRel tr = adjacency_contact({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  CHECK(check_axioms(tr).find("Ctr")->passed);
}

TEST_CASE("Ccon matches weak connectivity of R, not directed reachability") {
  // x -> y <- z: every cut is crossed, yet x and z are not joined by a directed path
  const PrecontactRel rel = adjacency_contact({"x", "y", "z"}, {{"x", "y"}, {"z", "y"}});
  CHECK(check_axioms(rel).find("Ccon")->passed);
  CHECK(rel.core().is_weakly_connected());
  CHECK_FALSE(rel.core().is_unilaterally_connected());

  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = Algebra::with_default_names(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const PrecontactRel r = rel_from_core(alg, oracle::core_from_bits(n, bits));
      CHECK(oracle::c_con(oracle_table(r)) == r.core().is_weakly_connected());
    }
  }
}

TEST_CASE("contact and precontact enumeration counts") {
  std::size_t expected_contact[] = {1, 1, 2, 8, 64};
  for (std::size_t n = 0; n <= 4; ++n) {
    const Algebra alg = Algebra::with_default_names(n);
    std::size_t count = 0;
    enumerate_contact_relations(alg, [&](const PrecontactRel& c) {
      CHECK(oracle::is_contact(oracle_table(c)));
      ++count;
    });
    CHECK(count == expected_contact[n]);
  }
  std::size_t pre = 0;
  enumerate_precontact_relations(Algebra::with_default_names(3), [&](const PrecontactRel&) { ++pre; });
  CHECK(pre == 512);
  const auto list = contact_relations(Algebra::with_default_names(3));
  CHECK(list.front() == rho_s(Algebra::with_default_names(3)));
  CHECK(list.back() == rho_l(Algebra::with_default_names(3)));
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(contact_relations(Algebra::with_default_names(6)), CapError);
  CHECK_THROWS_AS(enumerate_precontact_relations(Algebra::with_default_names(5), [](const PrecontactRel&) {}),
                  CapError);
  ::setenv("WORKBENCH_CAP", "6", 1);
  CHECK(contact_enumeration_cap() == 6);
  CHECK(precontact_enumeration_cap() == 6);
  ::unsetenv("WORKBENCH_CAP");
  CHECK(contact_enumeration_cap() == 5);
  CHECK(precontact_enumeration_cap() == 4);
}

TEST_CASE("the way-below axiomatization is equivalent to C0 and C+") {
  // valid tables
  const Algebra b2({"p", "q"});
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const PrecontactRel rel = rel_from_core(b2, oracle::core_from_bits(2, bits));
    CHECK(ll_axiom_equivalence(rel.table()).passed());
  }
  // all 2^16 tables on B2, including those violating C0 or C+
  for (std::uint32_t bits = 0; bits < (1U << 16); bits += 7) {
    oracle::Table t(4, std::vector<bool>(4, false));
    for (std::size_t i = 0; i < 16; ++i) t[i / 4][i % 4] = ((bits >> i) & 1U) != 0;
    REQUIRE(ll_axiom_equivalence(testing::table_of(b2, t)).passed());
  }
}
