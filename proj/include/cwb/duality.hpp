#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cwb/boolean_core.hpp"
#include "cwb/dual_construction.hpp"
#include "cwb/finite_space.hpp"
#include "cwb/precontact.hpp"
#include "cwb/report.hpp"

namespace cwb {

/// A continuous map between topological pairs sending X0 into Y0.
struct TwoMap {
  TopPair source;
  TopPair target;
  std::vector<std::size_t> map;

  SpaceMap space_map() const { return {source.space, target.space, map}; }
};

bool is_two_map(const TwoMap& f);
/// Every continuous map X -> Y with f(X0) inside Y0, in counting order.
std::vector<std::vector<std::size_t>> all_two_maps(const TopPair& source, const TopPair& target);

// ---------------------------------------------------------------------------
// Connected Stone duality

/// Marks an image that is not an element of the target algebra.
inline constexpr AtomSet kNoElement = ~AtomSet{0};

/// RC(X,X0).
RegionAlgebra dt_object(const TopPair& pair);
/// G -> cl_X(X0 meet f^{-1}(G)) as an element map Dt(target) -> Dt(source),
/// kNoElement where the set is not in Dt(source). intersect_x0 = false
/// drops the X0 intersection, for negative controls.
std::vector<AtomSet> dt_element_map(const TwoMap& f, bool intersect_x0 = true);
/// The homomorphism Dt(f); Error if f is not a 2-map or the element map
/// is not a homomorphism.
BoolHom dt_morphism(const TwoMap& f);

CanonicalSpace da_object(const Algebra& algebra);
/// Gamma -> phi^{-1}(Gamma), a map Da(target) -> Da(source).
TwoMap da_morphism(const BoolHom& phi);

/// x -> sigma_x over RC(X,X0), as points of Da(Dt(P)).
std::vector<std::size_t> natural_t(const TopPair& pair);
/// a -> g_A(a), as elements of Dt(Da(A)).
std::vector<AtomSet> natural_g(const Algebra& algebra);

struct DualityOptions {
  std::size_t max_atoms = 3;
  /// Replaces the Dt element map, e.g. to inject a corrupted variant.
  std::function<std::vector<AtomSet>(const TwoMap&)> dt_override;
};

/// Functor laws, naturality squares, t and g isomorphisms over all algebras
/// up to max_atoms atoms and all homomorphisms between them. The Dt laws
/// are checked on every continuous 2-map between their canonical spaces;
/// naturality of t on the 2-maps Da(phi).
Report verify_duality(const DualityOptions& options = {});

/// Compares all continuous 2-maps between canonical Stone 2-spaces with
/// the image of Da. Continuous maps may differ off X0 while agreeing on it,
/// and Dt only sees X0, so maps outside the image break naturality of t.
Report two_map_audit(std::size_t max_atoms = 3);

// ---------------------------------------------------------------------------
// Extremally connected spaces

TopPair e1(const FiniteSpace& space);
FiniteSpace e2(const TopPair& pair);
FiniteSpace dac_object(const Algebra& algebra);
RegionAlgebra dtc_object(const FiniteSpace& space);
/// Continuous and u-point preserving.
bool is_ecc_morphism(const SpaceMap& f);
/// E1/E2 round trips and Dac/Dtc object duality for one algebra.
Report ecc_check(const Algebra& algebra);

// ---------------------------------------------------------------------------
// Extensions of finite discrete spaces

struct Extension {
  FiniteSpace base;
  PrecontactRel contact;
  CanonicalSpace space;
  /// y -> the point u_y.
  std::vector<std::size_t> embedding;

  const FiniteSpace& total() const { return space.space(); }
};

/// Clan space of (CO(Y), C) with y -> u_y. InputError unless C is a contact
/// relation on the powerset algebra of Y's points.
Extension build_extension(const FiniteSpace& base, const PrecontactRel& contact);
Extension build_extension(const PrecontactRel& contact);

/// F C G iff cl(c(F)) meets cl(c(G)).
PrecontactRel recovered_contact(const Extension& ext);
/// Dense embedding, C-semiregular total space, recovery of C.
Report extension_check(const Extension& ext);

/// Continuous f: total(b) -> total(a) with f after c_b = c_a (a <= b).
std::optional<std::vector<std::size_t>> projective_witness(const Extension& a, const Extension& b);
/// Continuous embedding f: total(a) -> total(b) with f after c_a = c_b (a <=_in b).
std::optional<std::vector<std::size_t>> injective_witness(const Extension& a, const Extension& b);
/// Homeomorphism phi with phi after c_a = c_b.
std::optional<std::vector<std::size_t>> equivalence_witness(const Extension& a, const Extension& b);

/// Continuous F: source -> target extending the forced values, by
/// backtracking with continuity pruning; optionally an embedding.
std::optional<std::vector<std::size_t>> extend_map(const FiniteSpace& source, const FiniteSpace& target,
                                                   const std::vector<std::optional<std::size_t>>& forced,
                                                   bool embedding);

struct ExtensionPoset {
  std::vector<Extension> records;
  /// leq[i][j]: records[i] <= records[j]; leq_in likewise.
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<bool>> leq_in;
  Report report;
};

/// All contact relations on P(Y) with their extensions and both orders;
/// the report certifies the order isomorphisms and the extremal elements.
/// CapError beyond 4 points.
ExtensionPoset extension_poset(const FiniteSpace& base);

struct GammaMap {
  CanonicalSpace gx;
  CanonicalSpace gy;
  std::vector<std::size_t> map;
  Report report;
};

/// gamma f = Da(phi_f) with phi_f(G) = f^{-1}(G), checked continuous and
/// commuting with the embeddings.
GammaMap gamma_extend_map(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f);

/// A continuous F: total(ext) -> z with F after c = f, for f landing in
/// the u-points of an extremally connected z.
std::optional<std::vector<std::size_t>> extend_into(const Extension& ext, const FiniteSpace& z,
                                                    const std::vector<std::size_t>& f);

}  // namespace cwb
