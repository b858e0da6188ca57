#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/bits.hpp"
#include "cwb/report.hpp"

namespace cwb {

/// A finite Boolean algebra presented by its atoms. Elements are atom sets;
/// 0 is the empty set and 1 the full set. The 0-atom algebra (0 = 1) is
/// allowed. Copies share the immutable atom table.
class Algebra {
 public:
  /// Throws InputError naming the first duplicate identifier.
  explicit Algebra(std::vector<std::string> atoms = {});

  /// Atoms named p, q, r, ... (a0, a1, ... past eleven atoms).
  static Algebra with_default_names(std::size_t n);

  std::size_t size() const { return impl_->atoms.size(); }
  std::size_t element_count() const { return std::size_t{1} << size(); }
  AtomSet zero() const { return 0; }
  AtomSet one() const { return full_mask<AtomSet>(size()); }
  AtomSet complement(AtomSet a) const { return one() & ~a; }
  bool contains(AtomSet a) const { return is_subset(a, one()); }

  const std::vector<std::string>& atoms() const { return impl_->atoms; }
  const std::string& atom(std::size_t i) const { return impl_->atoms.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::string label(AtomSet a) const { return set_label(a, impl_->atoms); }

  /// Same algebra: shared table, or identical atom sequences.
  bool operator==(const Algebra& other) const;

 private:
  struct Impl {
    std::vector<std::string> atoms;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An element tied to its algebra; the Boolean operations reject operands
/// from different algebras with std::invalid_argument.
class Element {
 public:
  Element(Algebra algebra, AtomSet atoms);

  const Algebra& algebra() const { return algebra_; }
  AtomSet atoms() const { return atoms_; }
  bool is_zero() const { return atoms_ == 0; }
  bool is_one() const { return atoms_ == algebra_.one(); }
  std::string label() const { return algebra_.label(atoms_); }

  bool operator==(const Element& other) const;

 private:
  Algebra algebra_;
  AtomSet atoms_;
};

Element join(const Element& a, const Element& b);
Element meet(const Element& a, const Element& b);
Element complement(const Element& a);
bool leq(const Element& a, const Element& b);

/// Arbitrary join; every finite algebra is complete.
Element join_all(const Algebra& algebra, const std::vector<Element>& elements);

/// Principal ultrafilters, one per atom, encoded as singleton atom sets.
std::vector<AtomSet> ultrafilters(const Algebra& algebra);

/// Ultrafilters containing a; with the singleton encoding these are the
/// atoms below a, returned as a set of ultrafilter (= atom) indices.
AtomSet stone_map(const Algebra& algebra, AtomSet a);

/// A Boolean homomorphism source -> target encoded by its dual map on atoms:
/// point_map sends each atom of the target to an atom of the source, and
/// phi(a) = point_map^{-1}(a).
class BoolHom {
 public:
  /// Throws InputError if point_map is not total or points outside source.
  BoolHom(Algebra source, Algebra target, std::vector<std::size_t> point_map);

  static BoolHom identity(const Algebra& algebra);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const std::vector<std::size_t>& point_map() const { return point_map_; }

  AtomSet apply(AtomSet a) const;
  Element apply(const Element& a) const;

  /// (this after first): first : A -> B, this : B -> C.
  BoolHom after(const BoolHom& first) const;

  bool operator==(const BoolHom& other) const;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<std::size_t> point_map_;
};

/// Exhaustively verifies preservation of 0, 1, +, ., * over all elements.
Report hom_check(const BoolHom& hom);

/// Checks an arbitrary element map (indexed by source element) for the
/// Boolean homomorphism laws.
Report element_map_check(const Algebra& source, const Algebra& target,
                         const std::vector<AtomSet>& image);

/// Recovers the dual point map of a homomorphism given on elements; empty
/// when the map is not a homomorphism.
std::optional<BoolHom> hom_from_element_map(const Algebra& source, const Algebra& target,
                                            const std::vector<AtomSet>& image);

/// Every point map source <- target, in counting order.
std::vector<BoolHom> all_homs(const Algebra& source, const Algebra& target);

}  // namespace cwb
