#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cwb/bits.hpp"
#include "cwb/boolean_core.hpp"
#include "cwb/finite_space.hpp"
#include "cwb/precontact.hpp"
#include "cwb/report.hpp"

namespace cwb {

/// (X, X0, R) with R a relation on the points of X whose pairs lie in X0.
struct TwoPCS {
  TopPair pair;
  BinaryRelation r;
};

/// The space of clans of (B,C) with the closed base g(a) = {clans containing a},
/// ultrafilters as X0 and R_B on them. Points are clan atom sets in
/// shortlex order, named by their atom labels.
struct CanonicalSpace {
  PrecontactRel rel;
  std::vector<AtomSet> points;
  TwoPCS pcs;

  const TopPair& pair() const { return pcs.pair; }
  const FiniteSpace& space() const { return pcs.pair.space; }
  /// g(a): the clans containing a.
  PointSet g(AtomSet a) const;
  /// Index of the point with the given atom set.
  std::optional<std::size_t> point_of(AtomSet atoms) const;
};

CanonicalSpace canonical_2pcs(const PrecontactRel& rel);
/// InputError unless rel is a contact relation.
CanonicalSpace canonical_2cs(const PrecontactRel& rel);
/// Grills of B over rho_l.
CanonicalSpace canonical_stone2(const Algebra& algebra);

/// RC(X,X0) with F C_S G iff some x in F meet X0 and y in G meet X0 have xRy.
struct CanonicalAlgebra {
  RegionAlgebra regions;
  PrecontactRel rel;
};
CanonicalAlgebra canonical_algebra_of_2pcs(const TwoPCS& pcs);
/// RC(X,X0) with the intersection contact.
CanonicalAlgebra canonical_algebra_of_2cs(const TopPair& pair);

/// C_R on CO(X0).
PrecontactRel clopen_relation(const TwoPCS& pcs);

Report check_pcs(const TwoPCS& pcs);
Report check_cs(const TopPair& pair);
Report check_s2s(const TopPair& pair);

/// x R y iff cl F meets cl G for every clopen F of X0 containing x and
/// every clopen G containing y.
BinaryRelation derived_relation_of_2cs(const TopPair& pair);
/// The derived relation makes a 2-precontact space and no other reflexive
/// symmetric relation on X0 does. CapError when X0 has more than 5 points.
Report derived_relation_uniqueness(const TopPair& pair);

/// Witness atom bijection (index i of a -> atom of b) or nothing; CapError
/// beyond 8 atoms.
std::optional<std::vector<std::size_t>> pca_isomorphism(const PrecontactRel& a, const PrecontactRel& b);
/// Witness point bijections; CapError beyond 10 points.
std::optional<std::vector<std::size_t>> pcs_isomorphism(const TwoPCS& a, const TwoPCS& b);
std::optional<std::vector<std::size_t>> cs_isomorphism(const TopPair& a, const TopPair& b);
/// S2S-isomorphism has the same shape as CS-isomorphism.
std::optional<std::vector<std::size_t>> s2s_isomorphism(const TopPair& a, const TopPair& b);

/// Representation checks for one precontact algebra.
Report verify_theorem(const PrecontactRel& rel);

/// Space -> algebra -> space is PCS-isomorphic to the input.
Report space_round_trip(const TwoPCS& pcs);

}  // namespace cwb
