#include "cwb/dual_construction.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "cwb/error.hpp"
#include "cwb/points.hpp"

namespace cwb {

// ---------------------------------------------------------------------------
// Canonical spaces

PointSet CanonicalSpace::g(AtomSet a) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((points[i] & a) != 0) out |= bit<PointSet>(i);
  return out;
}

std::optional<std::size_t> CanonicalSpace::point_of(AtomSet atoms) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == atoms) return i;
  return std::nullopt;
}

namespace {

CanonicalSpace build_canonical(const PrecontactRel& rel, std::vector<AtomSet> points) {
  const Algebra& alg = rel.algebra();
  if (points.size() > kMaxPoints)
    throw CapError("canonical space would have " + std::to_string(points.size()) + " points (limit 64)");
  CanonicalSpace out{rel, std::move(points), {}};
  std::vector<std::string> names;
  for (AtomSet p : out.points) names.push_back(alg.label(p));
  std::vector<PointSet> base;
  const AtomSet n = static_cast<AtomSet>(alg.element_count());
  for (AtomSet a = 0; a < n; ++a) base.push_back(out.g(a));
  FiniteSpace space = FiniteSpace::generate(std::move(names), base);

  PointSet x0 = 0;
  std::vector<std::size_t> ult_point(alg.size());
  for (std::size_t p = 0; p < alg.size(); ++p) {
    ult_point[p] = *out.point_of(bit<AtomSet>(p));
    x0 |= bit<PointSet>(ult_point[p]);
  }
  const CanonicalAdjacency adj = canonical_adjacency(rel);
  BinaryRelation r(out.points.size());
  for (auto [p, q] : adj.relation.pairs()) r.insert(ult_point[p], ult_point[q]);
  out.pcs = TwoPCS{TopPair{std::move(space), x0}, std::move(r)};
  return out;
}

}  // namespace

CanonicalSpace canonical_2pcs(const PrecontactRel& rel) { return build_canonical(rel, clan_sets(rel)); }

CanonicalSpace canonical_2cs(const PrecontactRel& rel) {
  if (!is_contact(rel)) throw InputError("canonical 2-contact space needs a reflexive symmetric relation");
  return canonical_2pcs(rel);
}

CanonicalSpace canonical_stone2(const Algebra& algebra) {
  std::vector<AtomSet> points;
  for (const auto& g : grills(algebra)) points.push_back(g.atoms);
  return build_canonical(rho_l(algebra), std::move(points));
}

// ---------------------------------------------------------------------------
// Canonical algebras

CanonicalAlgebra canonical_algebra_of_2pcs(const TwoPCS& pcs) {
  RegionAlgebra regions = rc_pair(pcs.pair);
  const std::size_t m = regions.atom_regions.size();
  BinaryRelation core(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const PointSet fi = regions.atom_regions[i] & pcs.pair.x0;
      const PointSet fj = regions.atom_regions[j] & pcs.pair.x0;
      bool found = false;
      for_each_bit(fi, [&](std::size_t x) { found = found || (pcs.r.row(x) & fj) != 0; });
      if (found) core.insert(i, j);
    }
  PrecontactRel rel(regions.algebra, std::move(core));
  return {std::move(regions), std::move(rel)};
}

CanonicalAlgebra canonical_algebra_of_2cs(const TopPair& pair) {
  RegionAlgebra regions = rc_pair(pair);
  PrecontactRel rel = intersection_contact(regions);
  return {std::move(regions), std::move(rel)};
}

PrecontactRel clopen_relation(const TwoPCS& pcs) {
  const RegionAlgebra co = clopen_algebra(pcs.pair);
  const std::size_t m = co.atom_regions.size();
  BinaryRelation core(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      bool found = false;
      for_each_bit(co.atom_regions[i], [&](std::size_t x) { found = found || (pcs.r.row(x) & co.atom_regions[j]) != 0; });
      if (found) core.insert(i, j);
    }
  return PrecontactRel(co.algebra, std::move(core));
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

void add_not_evaluated(Report& report, std::initializer_list<const char*> names) {
  for (const char* n : names) report.add(n, false, "not evaluated: X0 is not dense");
}

Check realization(const char* name, const TopPair& pair, const Algebra& co, const std::vector<AtomSet>& wanted,
                  const char* what) {
  std::vector<AtomSet> traces;
  for (std::size_t x = 0; x < pair.space.size(); ++x) traces.push_back(gamma(pair, x));
  for (AtomSet w : wanted)
    if (std::find(traces.begin(), traces.end(), w) == traces.end())
      return {name, false, std::string("unrealized ") + what + " " + co.label(w)};
  return {name, true};
}

void add_base_axioms(Report& report, const TopPair& pair, const char* t0, const char* stone, const char* base) {
  const FiniteSpace& x = pair.space;
  report.add(t0, is_T0(x), "two points share a closure");
  report.add(stone, is_discrete(subspace(x, pair.x0)), "X0 is not discrete");
  report.add(base, is_closed_base(x, rc_pair(pair)), "RC(X,X0) is not a closed base");
}

}  // namespace

Report check_pcs(const TwoPCS& pcs) {
  Report report("2-precontact space axioms");
  const TopPair& pair = pcs.pair;
  const FiniteSpace& x = pair.space;
  const bool dense = is_dense(x, pair.x0);
  const bool t0 = is_T0(x);
  report.add("PCS1", dense && t0, !dense ? "X0 is not dense" : "X is not T0");

  bool inside = pcs.r.size() == x.size();
  if (inside)
    for (auto [a, b] : pcs.r.pairs()) inside = inside && has(pair.x0, a) && has(pair.x0, b);
  const bool stone = is_discrete(subspace(x, pair.x0));
  report.add("PCS2", inside && stone, !inside ? "R leaves X0" : "X0 is not discrete",
             "closedness of R is finite-trivial");
  if (!dense) {
    add_not_evaluated(report, {"PCS3", "PCS4", "PCS5"});
    return report;
  }
  report.add("PCS3", is_closed_base(x, rc_pair(pair)), "RC(X,X0) is not a closed base");

  const RegionAlgebra co = clopen_algebra(pair);
  const PrecontactRel c_r = clopen_relation(pcs);
  const BinaryRelation flat = c_r.core().flat();
  Check pcs4{"PCS4", true};
  for (std::size_t i = 0; i < co.atom_regions.size() && pcs4.passed; ++i)
    for (std::size_t j = 0; j < co.atom_regions.size() && pcs4.passed; ++j)
      if ((x.closure(co.atom_regions[i]) & x.closure(co.atom_regions[j])) != 0 && !flat.contains(i, j))
        pcs4 = {"PCS4", false, "F=" + co.algebra.atom(i) + ", G=" + co.algebra.atom(j)};
  report.add(pcs4);
  report.add(realization("PCS5", pair, co.algebra, clan_sets(c_r), "clan"));
  return report;
}

Report check_cs(const TopPair& pair) {
  Report report("2-contact space axioms");
  const bool dense = is_dense(pair.space, pair.x0);
  report.add("pair", dense, "X0 is not dense");
  if (!dense) {
    add_not_evaluated(report, {"CS1", "CS2", "CS3", "CS4"});
    return report;
  }
  add_base_axioms(report, pair, "CS1", "CS2", "CS3");
  const RegionAlgebra co = clopen_algebra(pair);
  report.add(realization("CS4", pair, co.algebra, clan_sets(delta_pair(pair)), "clan"));
  return report;
}

Report check_s2s(const TopPair& pair) {
  Report report("Stone 2-space axioms");
  const bool dense = is_dense(pair.space, pair.x0);
  report.add("pair", dense, "X0 is not dense");
  if (!dense) {
    add_not_evaluated(report, {"CS1", "CS2", "CS3", "S2S4"});
    return report;
  }
  add_base_axioms(report, pair, "CS1", "CS2", "CS3");
  const RegionAlgebra co = clopen_algebra(pair);
  std::vector<AtomSet> all;
  for (const auto& g : grills(co.algebra)) all.push_back(g.atoms);
  report.add(realization("S2S4", pair, co.algebra, all, "grill"));
  return report;
}

BinaryRelation derived_relation_of_2cs(const TopPair& pair) {
  const FiniteSpace& x = pair.space;
  const auto comps = components(x, pair.x0);
  BinaryRelation r(x.size());
  // closure is monotone, so the smallest clopens (the components of x and
  // y) decide the quantifier over all clopens containing them
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j)
      if ((x.closure(comps[i]) & x.closure(comps[j])) != 0)
        for_each_bit(comps[i], [&](std::size_t a) {
          for_each_bit(comps[j], [&](std::size_t b) { r.insert(a, b); });
        });
  return r;
}

Report derived_relation_uniqueness(const TopPair& pair) {
  Report report("derived relation");
  const std::vector<std::size_t> pts = indices_of(pair.x0);
  if (pts.size() > 5) throw CapError("uniqueness search is limited to 5 points in X0");
  const BinaryRelation derived = derived_relation_of_2cs(pair);
  report.add("derived relation gives a 2-precontact space", check_pcs({pair, derived}).passed());

  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) off.emplace_back(pts[i], pts[j]);
  std::size_t passing = 0;
  std::string other;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    BinaryRelation r(pair.space.size());
    for (std::size_t p : pts) r.insert(p, p);
    for (std::size_t k = 0; k < off.size(); ++k)
      if (has(mask, k)) {
        r.insert(off[k].first, off[k].second);
        r.insert(off[k].second, off[k].first);
      }
    if (check_pcs({pair, r}).passed()) {
      ++passing;
      if (!(r == derived)) other = "another passing relation with " + std::to_string(r.pair_count()) + " pairs";
    }
  }
  report.add("unique among reflexive symmetric relations", passing == 1 && other.empty(),
             other.empty() ? std::to_string(passing) + " passing relations" : other);
  return report;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

using Profile = std::array<std::size_t, 6>;

std::optional<std::vector<std::size_t>> find_bijection(
    std::size_t n, const std::vector<Profile>& pa, const std::vector<Profile>& pb,
    const std::function<bool(std::size_t, std::size_t, std::size_t, std::size_t)>& compatible) {
  if (pa.size() != n || pb.size() != n) return std::nullopt;
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> map(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t x) {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      bool ok = compatible(x, y, x, y);
      for (std::size_t x2 = 0; x2 < x && ok; ++x2)
        ok = compatible(x, y, x2, map[x2]) && compatible(x2, map[x2], x, y);
      if (!ok) continue;
      used[y] = 1;
      map[x] = y;
      if (assign(x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

std::vector<Profile> space_profiles(const TopPair& pair, const BinaryRelation* r) {
  std::vector<Profile> out;
  for (std::size_t x = 0; x < pair.space.size(); ++x) {
    Profile p{static_cast<std::size_t>(popcount(pair.space.point_closure(x))),
              static_cast<std::size_t>(popcount(pair.space.point_open(x))),
              has(pair.x0, x) ? 1u : 0u, 0, 0, 0};
    if (r != nullptr) {
      p[3] = static_cast<std::size_t>(popcount(r->row(x)));
      p[4] = static_cast<std::size_t>(popcount(r->column(x)));
      p[5] = r->contains(x, x) ? 1 : 0;
    }
    out.push_back(p);
  }
  return out;
}

std::optional<std::vector<std::size_t>> pair_isomorphism(const TopPair& a, const TopPair& b, const BinaryRelation* ra,
                                                         const BinaryRelation* rb) {
  if (a.space.size() > 10 || b.space.size() > 10) throw CapError("isomorphism search is limited to 10 points");
  if (a.space.size() != b.space.size()) return std::nullopt;
  return find_bijection(a.space.size(), space_profiles(a, ra), space_profiles(b, rb),
                        [&](std::size_t x, std::size_t y, std::size_t x2, std::size_t y2) {
                          if (a.space.below(x, x2) != b.space.below(y, y2)) return false;
                          if (has(a.x0, x) != has(b.x0, y)) return false;
                          if (ra != nullptr && ra->contains(x, x2) != rb->contains(y, y2)) return false;
                          return true;
                        });
}

}  // namespace

std::optional<std::vector<std::size_t>> pca_isomorphism(const PrecontactRel& a, const PrecontactRel& b) {
  const std::size_t n = a.algebra().size();
  if (n > 8 || b.algebra().size() > 8) throw CapError("isomorphism search is limited to 8 atoms");
  if (n != b.algebra().size()) return std::nullopt;
  auto profiles = [](const BinaryRelation& r) {
    std::vector<Profile> out;
    for (std::size_t x = 0; x < r.size(); ++x)
      out.push_back({static_cast<std::size_t>(popcount(r.row(x))), static_cast<std::size_t>(popcount(r.column(x))),
                     r.contains(x, x) ? 1u : 0u, 0, 0, 0});
    return out;
  };
  return find_bijection(n, profiles(a.core()), profiles(b.core()),
                        [&](std::size_t x, std::size_t y, std::size_t x2, std::size_t y2) {
                          return a.core().contains(x, x2) == b.core().contains(y, y2);
                        });
}

std::optional<std::vector<std::size_t>> pcs_isomorphism(const TwoPCS& a, const TwoPCS& b) {
  return pair_isomorphism(a.pair, b.pair, &a.r, &b.r);
}

std::optional<std::vector<std::size_t>> cs_isomorphism(const TopPair& a, const TopPair& b) {
  return pair_isomorphism(a, b, nullptr, nullptr);
}

std::optional<std::vector<std::size_t>> s2s_isomorphism(const TopPair& a, const TopPair& b) {
  return pair_isomorphism(a, b, nullptr, nullptr);
}

// ---------------------------------------------------------------------------
// Theorem verification

namespace {

/// Compares two relations under an element map on every element pair, or
/// on atom pairs only when the algebra is large (both relations are
/// determined by their atom cores).
Check relation_preserved(std::string name, const PrecontactRel& source, const PrecontactRel& target,
                         const std::vector<AtomSet>& image) {
  const Algebra& alg = source.algebra();
  std::vector<AtomSet> elems;
  if (alg.size() <= 6) {
    for (AtomSet a = 0; a < alg.element_count(); ++a) elems.push_back(a);
  } else {
    for (std::size_t p = 0; p < alg.size(); ++p) elems.push_back(bit<AtomSet>(p));
  }
  for (AtomSet a : elems)
    for (AtomSet b : elems)
      if (source.holds(a, b) != target.holds(image[a], image[b]))
        return {std::move(name), false, "a=" + alg.label(a) + ", b=" + alg.label(b)};
  return {std::move(name), true};
}

bool bijective(const std::vector<AtomSet>& image) {
  auto sorted = image;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// Adds a Boolean-isomorphism check for an element map into a region
/// algebra; returns the image when every element lands in it.
std::optional<std::vector<AtomSet>> iso_into(Report& report, const std::string& name, const Algebra& source,
                                             const RegionAlgebra& target,
                                             const std::function<PointSet(AtomSet)>& region_of) {
  std::vector<AtomSet> image;
  for (AtomSet a = 0; a < source.element_count(); ++a) {
    auto e = target.element_of(region_of(a));
    if (!e) {
      report.add(name, false, "image of " + source.label(a) + " is not an element");
      return std::nullopt;
    }
    image.push_back(*e);
  }
  const Report hom = element_map_check(source, target.algebra, image);
  const bool bij = bijective(image) && image.size() == target.algebra.element_count();
  const Check* bad = hom.first_failure();
  report.add(name, hom.passed() && bij, bad ? bad->name + ": " + bad->witness : "not bijective");
  if (!hom.passed() || !bij) return std::nullopt;
  return image;
}

}  // namespace

Report verify_theorem(const PrecontactRel& rel) {
  Report report("representation");
  const Algebra& alg = rel.algebra();
  const CanonicalSpace cs = canonical_2pcs(rel);
  const TopPair& pair = cs.pair();
  const FiniteSpace& x = pair.space;

  report.merge(check_pcs(cs.pcs), "canonical space");

  const CanonicalAlgebra ca = canonical_algebra_of_2pcs(cs.pcs);
  auto g_image = iso_into(report, "g_B Boolean isomorphism onto RC(X,X0)", alg, ca.regions,
                          [&](AtomSet a) { return cs.g(a); });
  if (g_image) {
    report.add(relation_preserved("g_B preserves C onto C_S", rel, ca.rel, *g_image));
    report.add(relation_preserved("g_B preserves C# onto C_(X,X0)", sharp(rel), intersection_contact(ca.regions),
                                  *g_image));
  }

  auto sorted_regions = [](std::vector<PointSet> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  report.add("RC(X) = RC(X,X0)",
             sorted_regions(regular_closed(x).atom_regions) == sorted_regions(ca.regions.atom_regions),
             "regular closed sets outside RC(X,X0)", "completeness clause; every finite algebra is complete");

  // s_B onto CO(X0): the ultrafilter points below a
  const RegionAlgebra co = clopen_algebra(pair);
  auto s_image = iso_into(report, "s_B Boolean isomorphism onto CO(X0)", alg, co,
                          [&](AtomSet a) { return cs.g(a) & pair.x0; });
  const PrecontactRel c_r = clopen_relation(cs.pcs);
  if (s_image) report.add(relation_preserved("s_B preserves C onto C_R", rel, c_r, *s_image));

  if (alg.size() <= RelationTable::kMaxAtoms) {
    const Report ax = check_axioms(rel);
    BinaryRelation r0(alg.size());
    // R restricted to X0, indexed by atoms
    for (std::size_t p = 0; p < alg.size(); ++p)
      for (std::size_t q = 0; q < alg.size(); ++q)
        if (cs.pcs.r.contains(*cs.point_of(bit<AtomSet>(p)), *cs.point_of(bit<AtomSet>(q)))) r0.insert(p, q);
    auto agree = [&](const std::string& name, const char* axiom, bool property) {
      const bool holds = ax.find(axiom)->passed;
      report.add(name, holds == property,
                 std::string(axiom) + (holds ? " holds" : " fails") + ", property " + (property ? "holds" : "fails"),
                 std::string(axiom) + (holds ? " holds" : " fails"));
    };
    agree("Cref iff R reflexive", "Cref", r0.is_reflexive());
    agree("Csym iff R symmetric", "Csym", r0.is_symmetric());
    agree("Ctr iff R transitive", "Ctr", r0.is_transitive());
    agree("Ccon iff X connected", "Ccon", is_connected(x));
  }

  // closures of clopens meet exactly when the clopens are C_R#-related
  Check eq11{"closures meet iff (C_R)#", true};
  {
    const PrecontactRel c_r_sharp = sharp(c_r);
    const AtomSet m = static_cast<AtomSet>(co.algebra.element_count());
    const bool small = co.algebra.size() <= 6;
    for (AtomSet f = 0; f < m && eq11.passed; ++f) {
      if (!small && popcount(f) != 1) continue;
      for (AtomSet g = 0; g < m && eq11.passed; ++g) {
        if (!small && popcount(g) != 1) continue;
        const bool meet = (x.closure(co.region(f)) & x.closure(co.region(g))) != 0;
        if (meet != c_r_sharp.holds(f, g))
          eq11 = {eq11.name, false, "F=" + co.algebra.label(f) + ", G=" + co.algebra.label(g)};
      }
    }
  }
  report.add(eq11);

  if (alg.size() <= 8) {
    const bool iso = pca_isomorphism(rel, ca.rel).has_value();
    report.add("round trip PCA-isomorphic", iso, "no atom bijection preserves the relation");
  }
  return report;
}

Report space_round_trip(const TwoPCS& pcs) {
  Report report("space round trip");
  const CanonicalAlgebra ca = canonical_algebra_of_2pcs(pcs);
  const CanonicalSpace back = canonical_2pcs(ca.rel);
  const bool iso = pcs_isomorphism(pcs, back.pcs).has_value();
  report.add("PCS-isomorphic", iso, "no point bijection found");
  return report;
}

}  // namespace cwb
