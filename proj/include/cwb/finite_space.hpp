#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/bits.hpp"
#include "cwb/boolean_core.hpp"
#include "cwb/precontact.hpp"
#include "cwb/report.hpp"

namespace cwb {

/// A finite topological space generated by a closed base. Closing a base
/// under binary unions and intersections yields exactly the unions of the
/// point closures cl{x} = intersection of base members containing x, so
/// the space keeps those closures and derives everything else.
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Throws InputError on duplicate point names; std::invalid_argument if a
  /// base member mentions a point outside the carrier.
  static FiniteSpace generate(std::vector<std::string> points, const std::vector<PointSet>& closed_base);
  static FiniteSpace discrete(std::vector<std::string> points);
  static FiniteSpace indiscrete(std::vector<std::string> points);
  /// Default names x0, x1, ...
  static std::vector<std::string> default_names(std::size_t n);

  std::size_t size() const { return names_.size(); }
  PointSet full() const { return full_mask<PointSet>(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string label(PointSet s) const { return set_label(s, names_); }

  PointSet point_closure(std::size_t x) const { return point_closure_.at(x); }
  /// Smallest open set containing x: every y with x in cl{y}.
  PointSet point_open(std::size_t x) const { return point_open_.at(x); }
  /// x lies in the closure of {y}.
  bool below(std::size_t x, std::size_t y) const { return has(point_closure_.at(y), x); }

  PointSet closure(PointSet s) const;
  PointSet interior(PointSet s) const;
  bool is_closed(PointSet s) const { return closure(s) == s; }
  bool is_open(PointSet s) const { return interior(s) == s; }

  /// Full closed-set and open-set families in shortlex order. CapError
  /// beyond 2^20 sets.
  std::vector<PointSet> closed_sets() const;
  std::vector<PointSet> open_sets() const;

  bool operator==(const FiniteSpace& other) const = default;

 private:
  FiniteSpace(std::vector<std::string> names, std::vector<PointSet> closures);

  std::vector<std::string> names_;
  std::vector<PointSet> point_closure_;
  std::vector<PointSet> point_open_;
};

/// A space with a distinguished subset; density is checked, not assumed.
struct TopPair {
  FiniteSpace space;
  PointSet x0 = 0;
};

struct SpaceMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> map;

  PointSet image(PointSet s) const;
  PointSet preimage(PointSet s) const;
};

/// Boolean algebra of regions: atoms are minimal nonempty regions and the
/// element with atom set a is the union of their regions.
struct RegionAlgebra {
  Algebra algebra;
  std::vector<PointSet> atom_regions;

  PointSet region(AtomSet a) const;
  /// The element whose region is exactly `s`, if any.
  std::optional<AtomSet> element_of(PointSet s) const;
  /// Atoms whose region contains x.
  AtomSet atoms_containing(std::size_t x) const;
};

// ---------------------------------------------------------------------------
// Region algebras

/// Connected components of the subspace on `subset`, ordered by lowest point.
std::vector<PointSet> components(const FiniteSpace& space, PointSet subset);

/// RC(X): atoms are the closures of the maximal specialization classes.
RegionAlgebra regular_closed(const FiniteSpace& space);
/// CO(X): atoms are the connected components.
RegionAlgebra clopen_algebra(const FiniteSpace& space);
/// CO(X0) of the subspace, regions as subsets of X0.
RegionAlgebra clopen_algebra(const TopPair& pair);
/// RC(X,X0): closures in X of the clopen sets of X0, atoms in the order of
/// the components of X0.
RegionAlgebra rc_pair(const TopPair& pair);

/// F C G iff F and G meet, as a relation on the region algebra.
PrecontactRel intersection_contact(const RegionAlgebra& regions);

/// F delta G iff cl_X(F) and cl_X(G) meet, on CO(X0).
PrecontactRel delta_pair(const TopPair& pair);

/// The literal operations a* = cl(X\a), a.b = cl(int(a meet b)), a+b = a
/// union b, checked against the region algebra, together with the contact
/// axioms for C_X.
Report regular_closed_check(const FiniteSpace& space);

/// r(F) = F intersect X0 and e(G) = cl_X(G) between RC(X0) and RC(X),
/// checked to be mutually inverse Boolean isomorphisms.
Report restriction_extension_check(const TopPair& pair);

/// The subspace on `subset`, points renumbered in index order.
FiniteSpace subspace(const FiniteSpace& space, PointSet subset);

// ---------------------------------------------------------------------------
// Predicates

bool is_T0(const FiniteSpace& space);
bool is_connected(const FiniteSpace& space);
bool is_discrete(const FiniteSpace& space);
bool is_dense(const FiniteSpace& space, PointSet s);
bool is_extremally_disconnected(const FiniteSpace& space);
/// Every closed set is an intersection of members of the region algebra.
bool is_closed_base(const FiniteSpace& space, const RegionAlgebra& regions);
bool is_semiregular(const FiniteSpace& space);
/// Finite-trivial: every finite space is compact.
bool is_compact(const FiniteSpace& space);
/// Finite-trivial: a finite Hausdorff space is discrete.
bool is_hausdorff(const FiniteSpace& space);

// ---------------------------------------------------------------------------
// Maps

bool is_total(const SpaceMap& f);
/// Preimages of closed sets are closed; decided on the point closures.
bool is_continuous(const SpaceMap& f);
/// Images of open sets are open (and f is continuous).
bool is_open_map(const SpaceMap& f);
bool is_homeomorphism(const SpaceMap& f);
/// Injective and a homeomorphism onto the image with the subspace topology.
bool is_embedding(const SpaceMap& f);
/// Literal definitions over the full closed-set families, for oracles.
bool is_continuous_by_closed_sets(const SpaceMap& f);
bool is_open_map_by_open_sets(const SpaceMap& f);

// ---------------------------------------------------------------------------
// Point traces

/// sigma_x^B: atoms of B whose region contains x.
AtomSet sigma(const RegionAlgebra& regions, std::size_t x);
/// nu_x^B: elements of B whose interior contains x.
std::vector<AtomSet> nu(const FiniteSpace& space, const RegionAlgebra& regions, std::size_t x);
/// Gamma_{x,X0} as an atom set of CO(X0) (equivalently of RC(X,X0)).
AtomSet gamma(const TopPair& pair, std::size_t x);
/// u_x: the clopen sets of X containing x, as an atom set of CO(X).
AtomSet u_trace(const FiniteSpace& space, std::size_t x);

/// x in cl(U) and cl(V) implies x in cl(U meet V) for all open U, V.
PointSet u_points(const FiniteSpace& space);
/// Points whose sigma_x in RC(X) is an ultrafilter.
PointSet u_points_via_sigma(const FiniteSpace& space);

/// T0, semiregular, and every clan of (RC(X),C_X) is some sigma_x.
Report c_semiregular_check(const FiniteSpace& space);
bool is_C_semiregular(const FiniteSpace& space);
/// T0, semiregular, and every grill of RC(X) is some sigma_x.
Report extremally_connected_check(const FiniteSpace& space);
bool is_extremally_connected(const FiniteSpace& space);

/// int(cl U meet cl V) = int(cl(U meet V)) for all open U, V.
Report de_vries_check(const FiniteSpace& space);

}  // namespace cwb
