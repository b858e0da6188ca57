#include "cwb/precontact.hpp"

#include <cstdlib>
#include <stdexcept>

#include "cwb/error.hpp"

namespace cwb {

// ---------------------------------------------------------------------------
// BinaryRelation

BinaryRelation::BinaryRelation(std::size_t n) : rows_(n, 0) {
  if (n > kMaxPoints) throw CapError("relation carrier larger than 64");
}

BinaryRelation BinaryRelation::identity(std::size_t n) {
  BinaryRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

BinaryRelation BinaryRelation::full(std::size_t n) {
  BinaryRelation r(n);
  for (auto& row : r.rows_) row = full_mask<std::uint64_t>(n);
  return r;
}

BinaryRelation BinaryRelation::from_pairs(std::size_t n,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  BinaryRelation r(n);
  for (auto [x, y] : pairs) r.insert(x, y);
  return r;
}

void BinaryRelation::insert(std::size_t x, std::size_t y) {
  if (x >= size() || y >= size()) throw std::out_of_range("relation pair outside carrier");
  rows_[x] |= bit<std::uint64_t>(y);
}

std::uint64_t BinaryRelation::column(std::size_t y) const {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (has(rows_[x], y)) out |= bit<std::uint64_t>(x);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> BinaryRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

std::size_t BinaryRelation::pair_count() const {
  std::size_t total = 0;
  for (auto row : rows_) total += static_cast<std::size_t>(popcount(row));
  return total;
}

bool BinaryRelation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const { return *this == transpose(); }

bool BinaryRelation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    std::uint64_t reach = 0;
    for_each_bit(rows_[x], [&](std::size_t y) { reach |= rows_[y]; });
    if (!is_subset(reach, rows_[x])) return false;
  }
  return true;
}

namespace {

std::uint64_t reachable_from(const std::vector<std::uint64_t>& rows, std::size_t start) {
  std::uint64_t seen = bit<std::uint64_t>(start);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](std::size_t y) { next |= rows[y]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool BinaryRelation::is_weakly_connected() const {
  if (size() <= 1) return true;
  const BinaryRelation sym = flat();
  return reachable_from(sym.rows_, 0) == full_mask<std::uint64_t>(size());
}

bool BinaryRelation::is_unilaterally_connected() const {
  std::vector<std::uint64_t> reach(size());
  for (std::size_t x = 0; x < size(); ++x) reach[x] = reachable_from(rows_, x);
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!has(reach[x], y) && !has(reach[y], x)) return false;
  return true;
}

BinaryRelation BinaryRelation::flat() const {
  BinaryRelation out = transpose();
  for (std::size_t x = 0; x < size(); ++x) out.rows_[x] |= rows_[x] | bit<std::uint64_t>(x);
  return out;
}

BinaryRelation BinaryRelation::transpose() const {
  BinaryRelation out(size());
  for (std::size_t x = 0; x < size(); ++x)
    for_each_bit(rows_[x], [&](std::size_t y) { out.rows_[y] |= bit<std::uint64_t>(x); });
  return out;
}

bool BinaryRelation::subset_of(const BinaryRelation& other) const {
  if (size() != other.size()) return false;
  for (std::size_t x = 0; x < size(); ++x)
    if (!is_subset(rows_[x], other.rows_[x])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// RelationTable

RelationTable::RelationTable(Algebra algebra) : algebra_(std::move(algebra)) {
  if (algebra_.size() > kMaxAtoms)
    throw CapError("explicit relation tables are limited to " + std::to_string(kMaxAtoms) + " atoms");
  bits_.assign(algebra_.element_count() * algebra_.element_count(), 0);
}

std::vector<std::pair<AtomSet, AtomSet>> RelationTable::pairs() const {
  std::vector<std::pair<AtomSet, AtomSet>> out;
  const AtomSet n = static_cast<AtomSet>(algebra_.element_count());
  for (AtomSet a = 0; a < n; ++a)
    for (AtomSet b = 0; b < n; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool RelationTable::operator==(const RelationTable& other) const {
  return algebra_ == other.algebra_ && bits_ == other.bits_;
}

// ---------------------------------------------------------------------------
// PrecontactRel

PrecontactRel::PrecontactRel(Algebra algebra, BinaryRelation core)
    : algebra_(std::move(algebra)), core_(std::move(core)) {
  if (core_.size() != algebra_.size())
    throw std::invalid_argument("core relation size does not match the algebra");
}

bool PrecontactRel::holds(AtomSet a, AtomSet b) const {
  bool found = false;
  for_each_bit(a, [&](std::size_t p) {
    if (!found && (core_.row(p) & b) != 0) found = true;
  });
  return found;
}

bool PrecontactRel::holds(const Element& a, const Element& b) const {
  if (!(a.algebra() == algebra_) || !(b.algebra() == algebra_))
    throw std::invalid_argument("elements do not belong to the relation's algebra");
  return holds(a.atoms(), b.atoms());
}

RelationTable PrecontactRel::table() const {
  RelationTable t(algebra_);
  const AtomSet n = static_cast<AtomSet>(algebra_.element_count());
  // reach[a] = atoms related to some atom of a
  std::vector<AtomSet> reach(n, 0);
  for (AtomSet a = 1; a < n; ++a) {
    const auto p = static_cast<std::size_t>(std::countr_zero(a));
    reach[a] = reach[a & (a - 1)] | static_cast<AtomSet>(core_.row(p));
  }
  for (AtomSet a = 0; a < n; ++a)
    for (AtomSet b = 0; b < n; ++b)
      if ((reach[a] & b) != 0) t.set(a, b);
  return t;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

std::string pair_label(const Algebra& alg, AtomSet a, AtomSet b) {
  return "a=" + alg.label(a) + ", b=" + alg.label(b);
}

struct AxiomScan {
  const RelationTable& t;
  const Algebra& alg;
  AtomSet n;

  bool ll(AtomSet a, AtomSet b) const { return !t.contains(a, alg.complement(b)); }

  Check c0() const {
    for (AtomSet a = 0; a < n; ++a)
      for (AtomSet b = 0; b < n; ++b)
        if (t.contains(a, b) && (a == 0 || b == 0)) return {"C0", false, pair_label(alg, a, b)};
    return {"C0", true};
  }

  Check cplus() const {
    for (AtomSet a = 0; a < n; ++a)
      for (AtomSet b = 0; b < n; ++b)
        for (AtomSet c = 0; c < n; ++c) {
          if (t.contains(a, b | c) != (t.contains(a, b) || t.contains(a, c)))
            return {"C+", false,
                    "a=" + alg.label(a) + ", b=" + alg.label(b) + ", c=" + alg.label(c) + " (right argument)"};
          if (t.contains(a | b, c) != (t.contains(a, c) || t.contains(b, c)))
            return {"C+", false,
                    "a=" + alg.label(a) + ", b=" + alg.label(b) + ", c=" + alg.label(c) + " (left argument)"};
        }
    return {"C+", true};
  }

  Check cref() const {
    for (AtomSet a = 1; a < n; ++a)
      if (!t.contains(a, a)) return {"Cref", false, "a=" + alg.label(a)};
    return {"Cref", true};
  }

  Check csym() const {
    for (AtomSet a = 0; a < n; ++a)
      for (AtomSet b = 0; b < n; ++b)
        if (t.contains(a, b) && !t.contains(b, a)) return {"Csym", false, pair_label(alg, a, b)};
    return {"Csym", true};
  }

  Check ctr(std::string name) const {
    for (AtomSet a = 0; a < n; ++a)
      for (AtomSet c = 0; c < n; ++c) {
        if (!ll(a, c)) continue;
        bool found = false;
        for (AtomSet b = 0; b < n && !found; ++b) found = ll(a, b) && ll(b, c);
        if (!found) return {std::move(name), false, "a=" + alg.label(a) + ", c=" + alg.label(c)};
      }
    return {std::move(name), true};
  }

  Check ccon() const {
    for (AtomSet a = 1; a + 1 < n; ++a) {
      const AtomSet ac = alg.complement(a);
      if (!t.contains(a, ac) && !t.contains(ac, a)) return {"Ccon", false, "a=" + alg.label(a)};
    }
    return {"Ccon", true};
  }

  Check c6() const {
    for (AtomSet a = 0; a < n; ++a) {
      if (a == alg.one()) continue;
      bool found = false;
      for (AtomSet b = 1; b < n && !found; ++b) found = !t.contains(b, a);
      if (!found) return {"C6", false, "a=" + alg.label(a)};
    }
    return {"C6", true};
  }
};

}  // namespace

Report check_axioms(const RelationTable& table) {
  Report report("axioms");
  const Algebra& alg = table.algebra();
  const AxiomScan scan{table, alg, static_cast<AtomSet>(alg.element_count())};
  report.add(scan.c0());
  report.add(scan.cplus());
  report.add(scan.cref());
  report.add(scan.csym());
  report.add(scan.ctr("Ctr"));
  report.add(scan.ccon());
  const RelationTable sharp_table = sharp(table);
  const AxiomScan sharp_scan{sharp_table, alg, static_cast<AtomSet>(alg.element_count())};
  report.add(sharp_scan.ctr("Ctr#"));
  report.add(scan.c6());
  return report;
}

Report check_axioms(const PrecontactRel& rel) { return check_axioms(rel.table()); }

bool is_precontact(const RelationTable& table) {
  const AxiomScan scan{table, table.algebra(), static_cast<AtomSet>(table.algebra().element_count())};
  return scan.c0().passed && scan.cplus().passed;
}

bool is_contact(const PrecontactRel& rel) {
  const auto& core = rel.core();
  return core.is_reflexive() && core.is_symmetric();
}

PrecontactRel from_table(const RelationTable& table) {
  const Algebra& alg = table.algebra();
  const AxiomScan scan{table, alg, static_cast<AtomSet>(alg.element_count())};
  for (const Check& c : {scan.c0(), scan.cplus()})
    if (!c.passed) throw InputError("relation table violates " + c.name + ": " + c.witness);
  BinaryRelation core(alg.size());
  for (std::size_t p = 0; p < alg.size(); ++p)
    for (std::size_t q = 0; q < alg.size(); ++q)
      if (table.contains(bit<AtomSet>(p), bit<AtomSet>(q))) core.insert(p, q);
  return PrecontactRel(alg, std::move(core));
}

PrecontactRel sharp(const PrecontactRel& rel) { return PrecontactRel(rel.algebra(), rel.core().flat()); }

RelationTable sharp(const RelationTable& table) {
  RelationTable out(table.algebra());
  const AtomSet n = static_cast<AtomSet>(table.algebra().element_count());
  for (AtomSet a = 0; a < n; ++a)
    for (AtomSet b = 0; b < n; ++b)
      if (table.contains(a, b) || table.contains(b, a) || (a & b) != 0) out.set(a, b);
  return out;
}

bool way_below(const PrecontactRel& rel, AtomSet a, AtomSet b) {
  return !rel.holds(a, rel.algebra().complement(b));
}

bool way_below(const PrecontactRel& rel, const Element& a, const Element& b) {
  return !rel.holds(a, complement(b));
}

PrecontactRel rho_s(const Algebra& algebra) {
  return PrecontactRel(algebra, BinaryRelation::identity(algebra.size()));
}

PrecontactRel rho_l(const Algebra& algebra) { return PrecontactRel(algebra, BinaryRelation::full(algebra.size())); }

PrecontactRel adjacency_contact(std::vector<std::string> cells,
                                const std::vector<std::pair<std::string, std::string>>& adjacency) {
  Algebra alg(std::move(cells));
  BinaryRelation core(alg.size());
  for (const auto& [x, y] : adjacency) {
    auto ix = alg.index_of(x);
    auto iy = alg.index_of(y);
    if (!ix || !iy)
      throw InputError("adjacency pair (" + x + "," + y + ") names a cell outside the cell set");
    core.insert(*ix, *iy);
  }
  return PrecontactRel(alg, std::move(core));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::size_t env_cap(std::size_t fallback) {
  if (const char* env = std::getenv("WORKBENCH_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return fallback;
}

void require_cap(std::size_t n, std::size_t cap, std::size_t hard_cap, const char* what) {
  if (n > cap)
    throw CapError(std::string(what) + " enumeration on " + std::to_string(n) + " atoms exceeds the cap of " +
                   std::to_string(cap) + " atoms (WORKBENCH_CAP overrides)");
  if (n > hard_cap)
    throw CapError(std::string(what) + " enumeration on " + std::to_string(n) +
                   " atoms exceeds the hard limit of " + std::to_string(hard_cap) + " atoms");
}

}  // namespace

std::size_t precontact_enumeration_cap() { return env_cap(4); }
std::size_t contact_enumeration_cap() { return env_cap(5); }

void enumerate_precontact_relations(const Algebra& algebra, const std::function<void(const PrecontactRel&)>& visit) {
  const std::size_t n = algebra.size();
  require_cap(n, precontact_enumeration_cap(), 7, "precontact");
  const std::size_t bits = n * n;
  const std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BinaryRelation core(n);
    for (std::size_t k = 0; k < bits; ++k)
      if (has(mask, k)) core.insert(k / n, k % n);
    visit(PrecontactRel(algebra, std::move(core)));
  }
}

void enumerate_contact_relations(const Algebra& algebra, const std::function<void(const PrecontactRel&)>& visit) {
  const std::size_t n = algebra.size();
  require_cap(n, contact_enumeration_cap(), 11, "contact");
  std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off_diagonal.emplace_back(p, q);
  const std::uint64_t total = std::uint64_t{1} << off_diagonal.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BinaryRelation core = BinaryRelation::identity(n);
    for (std::size_t k = 0; k < off_diagonal.size(); ++k)
      if (has(mask, k)) {
        core.insert(off_diagonal[k].first, off_diagonal[k].second);
        core.insert(off_diagonal[k].second, off_diagonal[k].first);
      }
    visit(PrecontactRel(algebra, std::move(core)));
  }
}

std::vector<PrecontactRel> contact_relations(const Algebra& algebra) {
  std::vector<PrecontactRel> out;
  enumerate_contact_relations(algebra, [&](const PrecontactRel& r) { out.push_back(r); });
  return out;
}

// ---------------------------------------------------------------------------
// << axiomatisation

Report ll_axiom_equivalence(const RelationTable& table) {
  Report report("<<-axiomatisation equivalence");
  const Algebra& alg = table.algebra();
  const AtomSet n = static_cast<AtomSet>(alg.element_count());
  const AtomSet one = alg.one();
  auto ll = [&](AtomSet a, AtomSet b) { return !table.contains(a, alg.complement(b)); };

  const bool precontact_side = is_precontact(table);

  Check ll2{"<<2", ll(0, 0)};
  if (!ll2.passed) ll2.witness = "0 << 0 fails";
  Check ll2p{"<<2'", ll(one, one)};
  if (!ll2p.passed) ll2p.witness = "1 << 1 fails";

  // <<3 reduces to single-atom steps: shrinking the left or growing the right.
  Check ll3{"<<3", true};
  for (AtomSet b = 0; b < n && ll3.passed; ++b)
    for (AtomSet c = 0; c < n && ll3.passed; ++c) {
      if (!ll(b, c)) continue;
      for (std::size_t p = 0; p < alg.size() && ll3.passed; ++p) {
        const AtomSet atom = bit<AtomSet>(p);
        if (has(b, p) && !ll(b & ~atom, c)) {
          ll3.passed = false;
          ll3.witness = "a=" + alg.label(b & ~atom) + " <= b=" + alg.label(b) + " << c=" + alg.label(c);
        } else if (!has(c, p) && !ll(b, c | atom)) {
          ll3.passed = false;
          ll3.witness = "b=" + alg.label(b) + " << c=" + alg.label(c) + " <= t=" + alg.label(c | atom);
        }
      }
    }

  Check ll4{"<<4", true};
  Check ll4p{"<<4'", true};
  for (AtomSet a = 0; a < n; ++a)
    for (AtomSet b = 0; b < n; ++b)
      for (AtomSet c = 0; c < n; ++c) {
        if (ll4.passed && ll(a, b) && ll(a, c) && !ll(a, b & c)) {
          ll4.passed = false;
          ll4.witness = "a=" + alg.label(a) + ", b=" + alg.label(b) + ", c=" + alg.label(c);
        }
        if (ll4p.passed && ll(a, c) && ll(b, c) && !ll(a | b, c)) {
          ll4p.passed = false;
          ll4p.witness = "a=" + alg.label(a) + ", b=" + alg.label(b) + ", c=" + alg.label(c);
        }
      }

  const bool ll_side = ll2.passed && ll2p.passed && ll3.passed && ll4.passed && ll4p.passed;
  // Side verdicts are recorded as notes; only the equivalence is a claim.
  for (const Check& c : {ll2, ll2p, ll3, ll4, ll4p})
    report.add(c.name, true, {}, c.passed ? "holds" : "fails at " + c.witness);
  report.add("C0+C+", true, {}, precontact_side ? "holds" : "fails");
  report.add("equivalence", precontact_side == ll_side,
             std::string("C0+C+ ") + (precontact_side ? "holds" : "fails") + " but the << axioms " +
                 (ll_side ? "hold" : "fail"));
  return report;
}

}  // namespace cwb
