#include "cwb/points.hpp"

#include <algorithm>

#include "cwb/error.hpp"

namespace cwb {

const char* kind_name(PointKind kind) {
  switch (kind) {
    case PointKind::ultrafilter:
      return "ultrafilter";
    case PointKind::grill:
      return "grill";
    case PointKind::clan:
      return "clan";
  }
  return "?";
}

ElementFamily family_of(const Algebra& algebra, AtomSet atoms) {
  ElementFamily out;
  const AtomSet n = static_cast<AtomSet>(algebra.element_count());
  for (AtomSet a = 0; a < n; ++a)
    if ((a & atoms) != 0) out.push_back(a);
  return out;
}

namespace {

std::vector<char> membership(const Algebra& algebra, const ElementFamily& family) {
  std::vector<char> in(algebra.element_count(), 0);
  for (AtomSet a : family) {
    if (!algebra.contains(a)) throw std::invalid_argument("family member outside the algebra");
    in[a] = 1;
  }
  return in;
}

}  // namespace

Report check_point_family(const Algebra& algebra, const ElementFamily& family, PointKind kind,
                          const PrecontactRel* rel) {
  Report report(std::string(kind_name(kind)) + " axioms");
  const auto in = membership(algebra, family);
  const AtomSet n = static_cast<AtomSet>(algebra.element_count());

  report.add("nonempty", !family.empty(), "empty family");
  report.add("Clan1", !in[0], "0 is a member");

  Check clan2{"Clan2", true};
  for (AtomSet a = 0; a < n && clan2.passed; ++a)
    for (AtomSet b = 0; b < n && clan2.passed; ++b)
      if (in[a] && is_subset(a, b) && !in[b]) {
        clan2.passed = false;
        clan2.witness = "a=" + algebra.label(a) + " member, b=" + algebra.label(b) + " not";
      }
  report.add(clan2);

  Check clan3{"Clan3", true};
  for (AtomSet a = 0; a < n && clan3.passed; ++a)
    for (AtomSet b = 0; b < n && clan3.passed; ++b)
      if (in[a | b] && !in[a] && !in[b]) {
        clan3.passed = false;
        clan3.witness = "a=" + algebra.label(a) + ", b=" + algebra.label(b);
      }
  report.add(clan3);

  if (kind == PointKind::clan) {
    if (rel == nullptr) throw std::invalid_argument("clan check needs a precontact relation");
    if (!(rel->algebra() == algebra)) throw std::invalid_argument("relation over a different algebra");
    const PrecontactRel s = sharp(*rel);
    Check clan4{"Clan4", true};
    for (AtomSet a = 0; a < n && clan4.passed; ++a)
      for (AtomSet b = 0; b < n && clan4.passed; ++b)
        if (in[a] && in[b] && !s.holds(a, b)) {
          clan4.passed = false;
          clan4.witness = "a=" + algebra.label(a) + ", b=" + algebra.label(b);
        }
    report.add(clan4);
  }
  if (kind == PointKind::ultrafilter) {
    Check meets{"meet-closed", true};
    for (AtomSet a = 0; a < n && meets.passed; ++a)
      for (AtomSet b = 0; b < n && meets.passed; ++b)
        if (in[a] && in[b] && !in[a & b]) {
          meets.passed = false;
          meets.witness = "a=" + algebra.label(a) + ", b=" + algebra.label(b);
        }
    report.add(meets);
  }
  return report;
}

bool is_grill(const Algebra& algebra, const ElementFamily& family) {
  return check_point_family(algebra, family, PointKind::grill).passed();
}

bool is_ultrafilter(const Algebra& algebra, const ElementFamily& family) {
  return check_point_family(algebra, family, PointKind::ultrafilter).passed();
}

bool is_clan(const PrecontactRel& rel, const ElementFamily& family) {
  return check_point_family(rel.algebra(), family, PointKind::clan, &rel).passed();
}

AtomSet normalize_family(const Algebra& algebra, const ElementFamily& family) {
  const Report r = check_point_family(algebra, family, PointKind::grill);
  if (const Check* bad = r.first_failure())
    throw InputError("family is not a grill: " + bad->name + " fails (" + bad->witness + ")");
  const auto in = membership(algebra, family);
  AtomSet atoms = 0;
  for (std::size_t p = 0; p < algebra.size(); ++p)
    if (in[bit<AtomSet>(p)]) atoms |= bit<AtomSet>(p);
  return atoms;
}

bool is_clique(const PrecontactRel& rel, AtomSet atoms) {
  const BinaryRelation flat = rel.core().flat();
  bool ok = true;
  for_each_bit(atoms, [&](std::size_t p) {
    if (!is_subset<std::uint64_t>(atoms, flat.row(p))) ok = false;
  });
  return ok;
}

namespace {

void extend_cliques(const BinaryRelation& flat, AtomSet clique, AtomSet candidates, std::vector<AtomSet>& out) {
  for_each_bit(candidates, [&](std::size_t p) {
    const AtomSet next = clique | bit<AtomSet>(p);
    out.push_back(next);
    // only later atoms, and only those adjacent to everything chosen so far
    const AtomSet later = candidates & ~full_mask<AtomSet>(p + 1);
    extend_cliques(flat, next, later & static_cast<AtomSet>(flat.row(p)), out);
  });
}

}  // namespace

std::vector<AtomSet> clan_sets(const PrecontactRel& rel) {
  std::vector<AtomSet> out;
  extend_cliques(rel.core().flat(), 0, rel.algebra().one(), out);
  std::sort(out.begin(), out.end(), [](AtomSet a, AtomSet b) { return shortlex_less(a, b); });
  return out;
}

std::vector<AbstractPoint> clans(const PrecontactRel& rel) {
  std::vector<AbstractPoint> out;
  for (AtomSet s : clan_sets(rel)) out.push_back({rel.algebra(), s, PointKind::clan});
  return out;
}

std::vector<AbstractPoint> grills(const Algebra& algebra) {
  std::vector<AtomSet> sets;
  const AtomSet n = static_cast<AtomSet>(algebra.element_count());
  for (AtomSet a = 1; a < n; ++a) sets.push_back(a);
  std::sort(sets.begin(), sets.end(), [](AtomSet a, AtomSet b) { return shortlex_less(a, b); });
  std::vector<AbstractPoint> out;
  for (AtomSet s : sets) out.push_back({algebra, s, PointKind::grill});
  return out;
}

std::vector<AbstractPoint> ultrafilter_points(const Algebra& algebra) {
  std::vector<AbstractPoint> out;
  for (AtomSet u : ultrafilters(algebra)) out.push_back({algebra, u, PointKind::ultrafilter});
  return out;
}

CanonicalAdjacency canonical_adjacency(const PrecontactRel& rel) {
  const Algebra& alg = rel.algebra();
  const AtomSet n = static_cast<AtomSet>(alg.element_count());
  CanonicalAdjacency out{ultrafilters(alg), BinaryRelation(alg.size())};
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = 0; j < alg.size(); ++j) {
      bool all = true;
      for (AtomSet a = 0; a < n && all; ++a) {
        if (!has(a, i)) continue;
        for (AtomSet b = 0; b < n && all; ++b)
          if (has(b, j) && !rel.holds(a, b)) all = false;
      }
      if (all) out.relation.insert(i, j);
    }
  return out;
}

std::size_t grill_lemma_witness(const Algebra& algebra, AtomSet filter_generator, AtomSet grill) {
  if (!algebra.contains(filter_generator) || !algebra.contains(grill))
    throw std::invalid_argument("sets outside the algebra");
  const AtomSet common = filter_generator & grill;
  if (common == 0)
    throw InputError("filter above " + algebra.label(filter_generator) + " is not contained in the grill " +
                     algebra.label(grill));
  return static_cast<std::size_t>(std::countr_zero(common));
}

Report contact_characterizations(const PrecontactRel& rel) {
  Report report("ultrafilter and clan characterisations");
  const Algebra& alg = rel.algebra();
  const AtomSet n = static_cast<AtomSet>(alg.element_count());
  const CanonicalAdjacency adj = canonical_adjacency(rel);
  const BinaryRelation flat = adj.relation.flat();
  const PrecontactRel s = sharp(rel);
  const std::vector<AtomSet> cl = clan_sets(rel);

  auto related = [&](const BinaryRelation& r, AtomSet a, AtomSet b) {
    bool found = false;
    for_each_bit(a, [&](std::size_t p) { found = found || (r.row(p) & b) != 0; });
    return found;
  };

  Check ca{"(a) C via R_B", true}, cb{"(b) C# via flat R_B", true}, cc{"(c) C# via clans", true};
  for (AtomSet a = 0; a < n; ++a)
    for (AtomSet b = 0; b < n; ++b) {
      const std::string w = "a=" + alg.label(a) + ", b=" + alg.label(b);
      if (ca.passed && rel.holds(a, b) != related(adj.relation, a, b)) ca = {ca.name, false, w};
      if (cb.passed && s.holds(a, b) != related(flat, a, b)) cb = {cb.name, false, w};
      const bool in_clan =
          std::any_of(cl.begin(), cl.end(), [&](AtomSet g) { return (g & a) != 0 && (g & b) != 0; });
      if (cc.passed && s.holds(a, b) != in_clan) cc = {cc.name, false, w};
    }
  report.add(ca);
  report.add(cb);
  report.add(cc);

  const Report axioms = check_axioms(rel);
  auto agree = [&](const char* name, const char* axiom, bool property) {
    const bool holds = axioms.find(axiom)->passed;
    report.add(name, holds == property,
               std::string(axiom) + (holds ? " holds" : " fails") + " but the property " +
                   (property ? "holds" : "fails"));
  };
  agree("(d) Cref iff R_B reflexive", "Cref", adj.relation.is_reflexive());
  agree("(e) Csym iff R_B symmetric", "Csym", adj.relation.is_symmetric());
  agree("(f) Ctr iff R_B transitive", "Ctr", adj.relation.is_transitive());
  return report;
}

}  // namespace cwb
