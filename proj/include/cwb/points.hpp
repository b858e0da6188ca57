#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cwb/bits.hpp"
#include "cwb/boolean_core.hpp"
#include "cwb/precontact.hpp"
#include "cwb/report.hpp"

namespace cwb {

enum class PointKind { ultrafilter, grill, clan };

const char* kind_name(PointKind kind);

/// An abstract point of an algebra: the up-closed prime family
/// {a : a meets atoms}, stored by its atom set.
struct AbstractPoint {
  Algebra algebra;
  AtomSet atoms = 0;
  PointKind kind = PointKind::grill;

  bool contains(AtomSet a) const { return (atoms & a) != 0; }
  std::string label() const { return algebra.label(atoms); }
};

/// An explicit family of elements, as given by a user or an oracle.
using ElementFamily = std::vector<AtomSet>;

/// The full family denoted by an atom set.
ElementFamily family_of(const Algebra& algebra, AtomSet atoms);

/// Clan1-Clan3 for grills; Clan1-Clan4 for clans (rel required);
/// grill plus closure under meets for ultrafilters.
Report check_point_family(const Algebra& algebra, const ElementFamily& family, PointKind kind,
                          const PrecontactRel* rel = nullptr);
bool is_grill(const Algebra& algebra, const ElementFamily& family);
bool is_ultrafilter(const Algebra& algebra, const ElementFamily& family);
bool is_clan(const PrecontactRel& rel, const ElementFamily& family);

/// Atom set of a grill given as an explicit family; InputError naming the
/// failing axiom when the family is not a grill.
AtomSet normalize_family(const Algebra& algebra, const ElementFamily& family);

/// Every two atoms of the set are related by the reflexive-symmetric
/// closure of the core.
bool is_clique(const PrecontactRel& rel, AtomSet atoms);

/// All nonempty cliques of the flattened core, shortlex ordered.
std::vector<AtomSet> clan_sets(const PrecontactRel& rel);
std::vector<AbstractPoint> clans(const PrecontactRel& rel);
std::vector<AbstractPoint> grills(const Algebra& algebra);
std::vector<AbstractPoint> ultrafilter_points(const Algebra& algebra);

struct CanonicalAdjacency {
  std::vector<AtomSet> ultrafilters;
  BinaryRelation relation;
};

/// u R v iff every element of u is in contact with every element of v,
/// evaluated over elements rather than read off the core.
CanonicalAdjacency canonical_adjacency(const PrecontactRel& rel);

/// Ultrafilter (atom index) between the principal filter above
/// `filter_generator` and the grill with atom set `grill`; lowest index
/// wins. InputError when the filter is not inside the grill.
std::size_t grill_lemma_witness(const Algebra& algebra, AtomSet filter_generator, AtomSet grill);

/// Ultrafilter and clan characterisations of C and C#, plus
/// reflexive/symmetric/transitive R_B against Cref/Csym/Ctr.
Report contact_characterizations(const PrecontactRel& rel);

}  // namespace cwb
