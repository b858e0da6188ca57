#include "cwb/finite_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cwb/error.hpp"
#include "cwb/points.hpp"

namespace cwb {

namespace {

constexpr std::size_t kMaxLatticeSize = std::size_t{1} << 20;

void sort_shortlex(std::vector<PointSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](PointSet a, PointSet b) { return shortlex_less(a, b); });
}

void check_names(const std::vector<std::string>& names) {
  if (names.size() > kMaxPoints) throw CapError("spaces are limited to 64 points");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty point identifier");
    if (!seen.insert(n).second) throw InputError("duplicate point identifier '" + n + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> names, std::vector<PointSet> closures)
    : names_(std::move(names)), point_closure_(std::move(closures)), point_open_(names_.size(), 0) {
  for (std::size_t y = 0; y < size(); ++y)
    for_each_bit(point_closure_[y], [&](std::size_t x) { point_open_[x] |= bit<PointSet>(y); });
}

FiniteSpace FiniteSpace::generate(std::vector<std::string> points, const std::vector<PointSet>& closed_base) {
  check_names(points);
  const PointSet all = full_mask<PointSet>(points.size());
  std::vector<PointSet> closures(points.size(), all);
  for (PointSet member : closed_base) {
    if (!is_subset(member, all)) throw std::invalid_argument("closed base member outside the carrier");
    for_each_bit(member, [&](std::size_t x) { closures[x] &= member; });
  }
  return FiniteSpace(std::move(points), std::move(closures));
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
  std::vector<PointSet> base;
  for (std::size_t i = 0; i < points.size(); ++i) base.push_back(bit<PointSet>(i));
  return generate(std::move(points), base);
}

FiniteSpace FiniteSpace::indiscrete(std::vector<std::string> points) { return generate(std::move(points), {}); }

std::vector<std::string> FiniteSpace::default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::optional<std::size_t> FiniteSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet out = 0;
  for_each_bit(s, [&](std::size_t x) { out |= point_closure_.at(x); });
  return out;
}

PointSet FiniteSpace::interior(PointSet s) const { return full() & ~closure(full() & ~s); }

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::unordered_set<PointSet> seen{0};
  std::vector<PointSet> out{0};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const PointSet s = out[i];
    for_each_bit(full() & ~s, [&](std::size_t x) {
      const PointSet next = s | point_closure_[x];
      if (seen.insert(next).second) {
        if (out.size() >= kMaxLatticeSize) throw CapError("closed-set lattice exceeds 2^20 members");
        out.push_back(next);
      }
    });
  }
  sort_shortlex(out);
  return out;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  std::vector<PointSet> out;
  for (PointSet c : closed_sets()) out.push_back(full() & ~c);
  sort_shortlex(out);
  return out;
}

// ---------------------------------------------------------------------------
// SpaceMap, RegionAlgebra

PointSet SpaceMap::image(PointSet s) const {
  PointSet out = 0;
  for_each_bit(s, [&](std::size_t x) { out |= bit<PointSet>(map.at(x)); });
  return out;
}

PointSet SpaceMap::preimage(PointSet s) const {
  PointSet out = 0;
  for (std::size_t x = 0; x < map.size(); ++x)
    if (has(s, map[x])) out |= bit<PointSet>(x);
  return out;
}

PointSet RegionAlgebra::region(AtomSet a) const {
  PointSet out = 0;
  for_each_bit(a, [&](std::size_t i) { out |= atom_regions.at(i); });
  return out;
}

std::optional<AtomSet> RegionAlgebra::element_of(PointSet s) const {
  AtomSet a = 0;
  for (std::size_t i = 0; i < atom_regions.size(); ++i)
    if (is_subset(atom_regions[i], s)) a |= bit<AtomSet>(i);
  if (region(a) != s) return std::nullopt;
  return a;
}

AtomSet RegionAlgebra::atoms_containing(std::size_t x) const {
  AtomSet out = 0;
  for (std::size_t i = 0; i < atom_regions.size(); ++i)
    if (has(atom_regions[i], x)) out |= bit<AtomSet>(i);
  return out;
}

// ---------------------------------------------------------------------------
// Region algebras

std::vector<PointSet> components(const FiniteSpace& space, PointSet subset) {
  std::vector<PointSet> out;
  PointSet left = subset;
  while (left != 0) {
    PointSet comp = bit<PointSet>(static_cast<std::size_t>(std::countr_zero(left)));
    PointSet frontier = comp;
    while (frontier != 0) {
      PointSet next = 0;
      for_each_bit(frontier, [&](std::size_t x) { next |= space.point_closure(x) | space.point_open(x); });
      next &= subset & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

namespace {

RegionAlgebra make_regions(const FiniteSpace& space, std::vector<PointSet> regions) {
  if (regions.size() > kMaxAtoms) throw CapError("region algebra with more than 16 atoms");
  std::vector<std::string> names;
  for (PointSet r : regions) names.push_back(space.label(r));
  return {Algebra(std::move(names)), std::move(regions)};
}

}  // namespace

RegionAlgebra regular_closed(const FiniteSpace& space) {
  std::vector<PointSet> regions;
  PointSet covered = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (has(covered, x)) continue;
    const bool maximal = is_subset(space.point_open(x), space.point_closure(x));
    if (!maximal) continue;
    covered |= space.point_open(x);  // the whole specialization class of x
    regions.push_back(space.point_closure(x));
  }
  return make_regions(space, std::move(regions));
}

RegionAlgebra clopen_algebra(const FiniteSpace& space) { return make_regions(space, components(space, space.full())); }

RegionAlgebra clopen_algebra(const TopPair& pair) { return make_regions(pair.space, components(pair.space, pair.x0)); }

RegionAlgebra rc_pair(const TopPair& pair) {
  if (!is_dense(pair.space, pair.x0)) throw InputError("X0 is not dense in X");
  std::vector<PointSet> regions;
  for (PointSet k : components(pair.space, pair.x0)) regions.push_back(pair.space.closure(k));
  return make_regions(pair.space, std::move(regions));
}

PrecontactRel intersection_contact(const RegionAlgebra& regions) {
  const std::size_t m = regions.atom_regions.size();
  BinaryRelation core(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((regions.atom_regions[i] & regions.atom_regions[j]) != 0) core.insert(i, j);
  return PrecontactRel(regions.algebra, std::move(core));
}

PrecontactRel delta_pair(const TopPair& pair) {
  const RegionAlgebra co = clopen_algebra(pair);
  const std::size_t m = co.atom_regions.size();
  BinaryRelation core(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if ((pair.space.closure(co.atom_regions[i]) & pair.space.closure(co.atom_regions[j])) != 0) core.insert(i, j);
  return PrecontactRel(co.algebra, std::move(core));
}

Report regular_closed_check(const FiniteSpace& space) {
  Report report("regular closed algebra");
  const RegionAlgebra rc = regular_closed(space);
  const AtomSet n = static_cast<AtomSet>(rc.algebra.element_count());

  std::vector<PointSet> literal;
  for (PointSet f : space.closed_sets())
    if (space.closure(space.interior(f)) == f) literal.push_back(f);
  std::vector<PointSet> derived;
  for (AtomSet a = 0; a < n; ++a) derived.push_back(rc.region(a));
  sort_shortlex(derived);
  report.add("regions are the regular closed sets", literal == derived,
             std::to_string(literal.size()) + " regular closed sets, " + std::to_string(derived.size()) + " regions");

  Check ops{"literal Boolean operations", true};
  for (AtomSet a = 0; a < n && ops.passed; ++a) {
    const PointSet fa = rc.region(a);
    if (rc.region(rc.algebra.complement(a)) != space.closure(space.full() & ~fa)) {
      ops = {ops.name, false, "complement of " + space.label(fa)};
      break;
    }
    for (AtomSet b = 0; b < n; ++b) {
      const PointSet fb = rc.region(b);
      if (rc.region(a | b) != (fa | fb) || rc.region(a & b) != space.closure(space.interior(fa & fb))) {
        ops = {ops.name, false, "F=" + space.label(fa) + ", G=" + space.label(fb)};
        break;
      }
    }
  }
  report.add(ops);

  if (rc.algebra.size() <= RelationTable::kMaxAtoms) {
    const Report ax = check_axioms(intersection_contact(rc));
    for (const char* name : {"C0", "C+", "Cref", "Csym"}) {
      const Check* c = ax.find(name);
      report.add(std::string("C_X ") + name, c->passed, c->witness);
    }
  }
  return report;
}

FiniteSpace subspace(const FiniteSpace& space, PointSet subset) {
  std::vector<std::size_t> idx = indices_of(subset);
  std::vector<std::string> names;
  std::vector<PointSet> closures;
  auto compress = [&](PointSet s) {
    PointSet out = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (has(s, idx[k])) out |= bit<PointSet>(k);
    return out;
  };
  for (std::size_t i : idx) {
    names.push_back(space.name(i));
    closures.push_back(compress(space.point_closure(i) & subset));
  }
  std::vector<PointSet> base = closures;
  return FiniteSpace::generate(std::move(names), base);
}

Report restriction_extension_check(const TopPair& pair) {
  Report report("restriction and extension");
  const FiniteSpace& x = pair.space;
  const FiniteSpace sub = subspace(x, pair.x0);
  const std::vector<std::size_t> idx = indices_of(pair.x0);
  auto expand = [&](PointSet s) {
    PointSet out = 0;
    for_each_bit(s, [&](std::size_t k) { out |= bit<PointSet>(idx[k]); });
    return out;
  };
  auto compress = [&](PointSet s) {
    PointSet out = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (has(s, idx[k])) out |= bit<PointSet>(k);
    return out;
  };

  const RegionAlgebra rc_x = regular_closed(x);
  const RegionAlgebra rc_0 = regular_closed(sub);
  const AtomSet n0 = static_cast<AtomSet>(rc_0.algebra.element_count());
  const AtomSet nx = static_cast<AtomSet>(rc_x.algebra.element_count());

  std::vector<AtomSet> e_image(n0, 0);
  Check e_lands{"e lands in RC(X)", true};
  for (AtomSet g = 0; g < n0; ++g) {
    auto f = rc_x.element_of(x.closure(expand(rc_0.region(g))));
    if (!f) {
      e_lands = {e_lands.name, false, "G=" + sub.label(rc_0.region(g))};
      break;
    }
    e_image[g] = *f;
  }
  report.add(e_lands);
  if (!e_lands.passed) return report;

  Check r_lands{"r lands in RC(X0)", true};
  Check inverse{"r and e mutually inverse", true};
  for (AtomSet f = 0; f < nx; ++f) {
    auto g = rc_0.element_of(compress(rc_x.region(f) & pair.x0));
    if (!g) {
      r_lands = {r_lands.name, false, "F=" + x.label(rc_x.region(f))};
      break;
    }
    if (inverse.passed && e_image[*g] != f) inverse = {inverse.name, false, "F=" + x.label(rc_x.region(f))};
  }
  report.add(r_lands);
  for (AtomSet g = 0; g < n0 && inverse.passed; ++g) {
    auto back = rc_0.element_of(compress(rc_x.region(e_image[g]) & pair.x0));
    if (!back || *back != g) inverse = {inverse.name, false, "G=" + sub.label(rc_0.region(g))};
  }
  report.add(inverse);
  report.merge(element_map_check(rc_0.algebra, rc_x.algebra, e_image), "e");
  return report;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_T0(const FiniteSpace& space) {
  std::unordered_set<PointSet> seen;
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!seen.insert(space.point_closure(x)).second) return false;
  return true;
}

bool is_connected(const FiniteSpace& space) { return components(space, space.full()).size() <= 1; }

bool is_discrete(const FiniteSpace& space) {
  for (std::size_t x = 0; x < space.size(); ++x)
    if (space.point_closure(x) != bit<PointSet>(x)) return false;
  return true;
}

bool is_dense(const FiniteSpace& space, PointSet s) { return space.closure(s) == space.full(); }

bool is_extremally_disconnected(const FiniteSpace& space) {
  // closures commute with unions, so the minimal open sets suffice
  for (std::size_t x = 0; x < space.size(); ++x)
    if (!space.is_open(space.closure(space.point_open(x)))) return false;
  return true;
}

bool is_closed_base(const FiniteSpace& space, const RegionAlgebra& regions) {
  // intersections distribute over the unions that build closed sets, so
  // it is enough to recover every point closure
  for (std::size_t x = 0; x < space.size(); ++x) {
    PointSet meet = space.full();
    for (PointSet r : regions.atom_regions)
      if (has(r, x)) meet &= r;
    if (meet != space.point_closure(x)) return false;
  }
  return true;
}

bool is_semiregular(const FiniteSpace& space) { return is_closed_base(space, regular_closed(space)); }

bool is_compact(const FiniteSpace&) { return true; }

bool is_hausdorff(const FiniteSpace& space) { return is_discrete(space); }

// ---------------------------------------------------------------------------
// Maps

bool is_total(const SpaceMap& f) {
  if (f.map.size() != f.source.size()) return false;
  return std::all_of(f.map.begin(), f.map.end(), [&](std::size_t y) { return y < f.target.size(); });
}

bool is_continuous(const SpaceMap& f) {
  if (!is_total(f)) return false;
  for (std::size_t y = 0; y < f.source.size(); ++y)
    if (!is_subset(f.image(f.source.point_closure(y)), f.target.point_closure(f.map[y]))) return false;
  return true;
}

bool is_open_map(const SpaceMap& f) {
  if (!is_continuous(f)) return false;
  for (std::size_t x = 0; x < f.source.size(); ++x)
    if (!f.target.is_open(f.image(f.source.point_open(x)))) return false;
  return true;
}

namespace {

bool injective(const SpaceMap& f) {
  PointSet seen = 0;
  for (std::size_t y : f.map) {
    if (has(seen, y)) return false;
    seen |= bit<PointSet>(y);
  }
  return true;
}

}  // namespace

bool is_embedding(const SpaceMap& f) {
  if (!is_total(f) || !injective(f)) return false;
  for (std::size_t x = 0; x < f.source.size(); ++x)
    for (std::size_t y = 0; y < f.source.size(); ++y)
      if (f.source.below(x, y) != f.target.below(f.map[x], f.map[y])) return false;
  return true;
}

bool is_homeomorphism(const SpaceMap& f) { return f.source.size() == f.target.size() && is_embedding(f); }

bool is_continuous_by_closed_sets(const SpaceMap& f) {
  if (!is_total(f)) return false;
  for (PointSet c : f.target.closed_sets())
    if (!f.source.is_closed(f.preimage(c))) return false;
  return true;
}

bool is_open_map_by_open_sets(const SpaceMap& f) {
  if (!is_continuous_by_closed_sets(f)) return false;
  for (PointSet u : f.source.open_sets())
    if (!f.target.is_open(f.image(u))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Point traces

AtomSet sigma(const RegionAlgebra& regions, std::size_t x) { return regions.atoms_containing(x); }

std::vector<AtomSet> nu(const FiniteSpace& space, const RegionAlgebra& regions, std::size_t x) {
  std::vector<AtomSet> out;
  const AtomSet n = static_cast<AtomSet>(regions.algebra.element_count());
  for (AtomSet a = 0; a < n; ++a)
    if (has(space.interior(regions.region(a)), x)) out.push_back(a);
  return out;
}

AtomSet gamma(const TopPair& pair, std::size_t x) {
  AtomSet out = 0;
  const auto comps = components(pair.space, pair.x0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (has(pair.space.closure(comps[i]), x)) out |= bit<AtomSet>(i);
  return out;
}

AtomSet u_trace(const FiniteSpace& space, std::size_t x) {
  const auto comps = components(space, space.full());
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (has(comps[i], x)) return bit<AtomSet>(i);
  return 0;
}

PointSet u_points(const FiniteSpace& space) {
  const std::vector<PointSet> opens = space.open_sets();
  std::vector<PointSet> cls;
  for (PointSet u : opens) cls.push_back(space.closure(u));
  PointSet bad = 0;
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i; j < opens.size(); ++j)
      bad |= cls[i] & cls[j] & ~space.closure(opens[i] & opens[j]);
  return space.full() & ~bad;
}

PointSet u_points_via_sigma(const FiniteSpace& space) {
  const RegionAlgebra rc = regular_closed(space);
  PointSet out = 0;
  for (std::size_t x = 0; x < space.size(); ++x)
    if (popcount(sigma(rc, x)) == 1) out |= bit<PointSet>(x);
  return out;
}

namespace {

Report realization_check(const FiniteSpace& space, bool all_grills) {
  Report report(all_grills ? "extremally connected" : "C-semiregular");
  report.add("T0", is_T0(space), "two points share a closure");
  report.add("semiregular", is_semiregular(space), "RC(X) is not a closed base");
  const RegionAlgebra rc = regular_closed(space);
  std::vector<AtomSet> points;
  if (all_grills) {
    for (const auto& g : grills(rc.algebra)) points.push_back(g.atoms);
  } else {
    points = clan_sets(intersection_contact(rc));
  }
  std::vector<AtomSet> traces;
  for (std::size_t x = 0; x < space.size(); ++x) traces.push_back(sigma(rc, x));
  Check realized{all_grills ? "grills realized" : "clans realized", true};
  for (AtomSet p : points)
    if (std::find(traces.begin(), traces.end(), p) == traces.end()) {
      realized = {realized.name, false, "unrealized " + rc.algebra.label(p)};
      break;
    }
  report.add(realized);
  return report;
}

}  // namespace

Report c_semiregular_check(const FiniteSpace& space) { return realization_check(space, false); }
bool is_C_semiregular(const FiniteSpace& space) { return c_semiregular_check(space).passed(); }
Report extremally_connected_check(const FiniteSpace& space) { return realization_check(space, true); }
bool is_extremally_connected(const FiniteSpace& space) { return extremally_connected_check(space).passed(); }

Report de_vries_check(const FiniteSpace& space) {
  Report report("de Vries identity");
  const std::vector<PointSet> opens = space.open_sets();
  Check c{"int(cl U meet cl V) = int(cl(U meet V))", true};
  for (std::size_t i = 0; i < opens.size() && c.passed; ++i)
    for (std::size_t j = i; j < opens.size() && c.passed; ++j) {
      const PointSet u = opens[i], v = opens[j];
      if (space.interior(space.closure(u) & space.closure(v)) != space.interior(space.closure(u & v)))
        c = {c.name, false, "U=" + space.label(u) + ", V=" + space.label(v)};
    }
  report.add(c);
  return report;
}

}  // namespace cwb
