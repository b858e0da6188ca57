#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cwb/bits.hpp"
#include "cwb/boolean_core.hpp"
#include "cwb/report.hpp"

namespace cwb {

/// A binary relation on {0..n-1}, n <= 64, stored as successor rows.
class BinaryRelation {
 public:
  explicit BinaryRelation(std::size_t n = 0);

  static BinaryRelation identity(std::size_t n);
  static BinaryRelation full(std::size_t n);
  static BinaryRelation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return rows_.size(); }
  bool contains(std::size_t x, std::size_t y) const { return has(rows_.at(x), y); }
  void insert(std::size_t x, std::size_t y);
  std::uint64_t row(std::size_t x) const { return rows_.at(x); }
  std::uint64_t column(std::size_t y) const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t pair_count() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  /// Every cut of the carrier is crossed by a pair in one direction or the
  /// other, i.e. the underlying undirected graph is connected.
  bool is_weakly_connected() const;
  /// Every two distinct nodes are joined by a directed path in at least
  /// one direction.
  bool is_unilaterally_connected() const;

  /// Reflexive-symmetric closure: x R' y iff xRy or yRx or x = y.
  BinaryRelation flat() const;
  BinaryRelation transpose() const;
  bool subset_of(const BinaryRelation& other) const;

  bool operator==(const BinaryRelation& other) const = default;

 private:
  std::vector<std::uint64_t> rows_;
};

/// An explicit candidate relation on the elements of an algebra, for
/// validating user-supplied relations. Limited to 8 atoms.
class RelationTable {
 public:
  static constexpr std::size_t kMaxAtoms = 8;

  explicit RelationTable(Algebra algebra);

  const Algebra& algebra() const { return algebra_; }
  bool contains(AtomSet a, AtomSet b) const { return bits_[index(a, b)] != 0; }
  void set(AtomSet a, AtomSet b, bool value = true) { bits_[index(a, b)] = value ? 1 : 0; }
  std::vector<std::pair<AtomSet, AtomSet>> pairs() const;

  bool operator==(const RelationTable& other) const;

 private:
  std::size_t index(AtomSet a, AtomSet b) const { return static_cast<std::size_t>(a) * algebra_.element_count() + b; }
  Algebra algebra_;
  std::vector<std::uint8_t> bits_;
};

/// A precontact relation stored by its atom-level core: a C b iff some
/// atom below a is core-related to some atom below b.
class PrecontactRel {
 public:
  PrecontactRel(Algebra algebra, BinaryRelation core);

  const Algebra& algebra() const { return algebra_; }
  const BinaryRelation& core() const { return core_; }

  bool holds(AtomSet a, AtomSet b) const;
  bool holds(const Element& a, const Element& b) const;
  RelationTable table() const;

  bool operator==(const PrecontactRel& other) const {
    return algebra_ == other.algebra_ && core_ == other.core_;
  }

 private:
  Algebra algebra_;
  BinaryRelation core_;
};

/// Axiom verdicts for an arbitrary table. Names: C0, C+, Cref, Csym, Ctr,
/// Ccon, Ctr#, C6. Witnesses are the first counterexample in element order.
Report check_axioms(const RelationTable& table);
Report check_axioms(const PrecontactRel& rel);

/// Precontact (C0, C+) or contact (C0, C+, Cref, Csym) verdict only.
bool is_precontact(const RelationTable& table);
bool is_contact(const PrecontactRel& rel);

/// Throws InputError carrying the failed axiom and witness unless the
/// table satisfies C0 and C+.
PrecontactRel from_table(const RelationTable& table);

/// a C# b iff aCb or bCa or a.b != 0.
PrecontactRel sharp(const PrecontactRel& rel);
/// Table-level C#, for tables that need not satisfy C+.
RelationTable sharp(const RelationTable& table);

/// Non-tangential inclusion: a << b iff not a C b*.
bool way_below(const PrecontactRel& rel, AtomSet a, AtomSet b);
bool way_below(const PrecontactRel& rel, const Element& a, const Element& b);

PrecontactRel rho_s(const Algebra& algebra);
PrecontactRel rho_l(const Algebra& algebra);

/// Powerset algebra of the cells with C_R; cells become atoms, R the core.
PrecontactRel adjacency_contact(std::vector<std::string> cells,
                                const std::vector<std::pair<std::string, std::string>>& adjacency);

/// Default caps; WORKBENCH_CAP in the environment overrides both.
std::size_t precontact_enumeration_cap();
std::size_t contact_enumeration_cap();

/// Visits all 2^(n^2) atom relations in counting order over row-major pairs.
void enumerate_precontact_relations(const Algebra& algebra, const std::function<void(const PrecontactRel&)>& visit);
/// Visits all 2^(n(n-1)/2) reflexive symmetric atom relations, rho_s first.
void enumerate_contact_relations(const Algebra& algebra, const std::function<void(const PrecontactRel&)>& visit);
std::vector<PrecontactRel> contact_relations(const Algebra& algebra);

/// Checks that C0+C+ on the table holds exactly when the derived << obeys
/// (<<2), (<<2'), (<<3), (<<4) and (<<4').
Report ll_axiom_equivalence(const RelationTable& table);

}  // namespace cwb
