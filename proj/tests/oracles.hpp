#pragma once

// Brute-force reference implementations written straight from the
// definitions, sharing nothing with the library but the bit helpers.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwb/bits.hpp"

namespace oracle {

using cwb::AtomSet;
using cwb::PointSet;

// ---------------------------------------------------------------------------
// Relations on the elements of the n-atom powerset algebra

/// table[a][b] for all elements a, b.
using Table = std::vector<std::vector<bool>>;

/// core[p][q] over atoms.
using Core = std::vector<std::vector<bool>>;

inline Core core_from_bits(std::size_t n, std::uint64_t bits) {
  Core c(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) c[p][q] = ((bits >> (p * n + q)) & 1U) != 0;
  return c;
}

inline Core random_core(std::size_t n, std::mt19937_64& rng) {
  return core_from_bits(n, rng() & ((n * n >= 64) ? ~0ULL : ((1ULL << (n * n)) - 1)));
}

/// a C b iff some atom of a is core-related to some atom of b.
inline Table table_from_core(std::size_t n, const Core& core) {
  const std::size_t m = std::size_t{1} << n;
  Table t(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          if (((a >> p) & 1U) && ((b >> q) & 1U) && core[p][q]) t[a][b] = true;
  return t;
}

inline std::size_t elements(const Table& t) { return t.size(); }

inline bool c0(const Table& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    if (t[0][a] || t[a][0]) return false;
  return true;
}

inline bool c_plus(const Table& t) {
  const std::size_t m = t.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (t[a][b | c] != (t[a][b] || t[a][c])) return false;
        if (t[a | b][c] != (t[a][c] || t[b][c])) return false;
      }
  return true;
}

inline bool c_ref(const Table& t) {
  for (std::size_t a = 1; a < t.size(); ++a)
    if (!t[a][a]) return false;
  return true;
}

inline bool c_sym(const Table& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

/// a << b iff not a C b*.
inline bool ll(const Table& t, std::size_t a, std::size_t b) { return !t[a][(t.size() - 1) & ~b]; }

inline bool c_tr(const Table& t) {
  const std::size_t m = t.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      if (!ll(t, a, c)) continue;
      bool found = false;
      for (std::size_t b = 0; b < m && !found; ++b) found = ll(t, a, b) && ll(t, b, c);
      if (!found) return false;
    }
  return true;
}

inline bool c_con(const Table& t) {
  const std::size_t one = t.size() - 1;
  for (std::size_t a = 1; a < one; ++a)
    if (!t[a][one & ~a] && !t[one & ~a][a]) return false;
  return true;
}

inline bool is_contact(const Table& t) { return c0(t) && c_plus(t) && c_ref(t) && c_sym(t); }

inline Table sharp(const Table& t) {
  Table s = t;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) s[a][b] = t[a][b] || t[b][a] || (a & b) != 0;
  return s;
}

// ---------------------------------------------------------------------------
// Families of elements, as bit masks over element indices (n <= 4)

inline bool in(std::uint32_t family, std::size_t a) { return ((family >> a) & 1U) != 0; }

inline bool grill_axioms(std::size_t n, std::uint32_t f) {
  const std::size_t m = std::size_t{1} << n;
  if (f == 0 || in(f, 0)) return false;
  for (std::size_t a = 0; a < m; ++a) {
    if (!in(f, a)) continue;
    for (std::size_t b = 0; b < m; ++b)
      if ((a & ~b) == 0 && !in(f, b)) return false;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (in(f, a | b) && !in(f, a) && !in(f, b)) return false;
  return true;
}

inline bool clan_axioms(std::size_t n, const Table& sharp_table, std::uint32_t f) {
  if (!grill_axioms(n, f)) return false;
  const std::size_t m = std::size_t{1} << n;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (in(f, a) && in(f, b) && !sharp_table[a][b]) return false;
  return true;
}

inline bool ultrafilter_axioms(std::size_t n, std::uint32_t f) {
  const std::size_t m = std::size_t{1} << n;
  if (f == 0 || in(f, 0)) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (in(f, a) && (a & ~b) == 0 && !in(f, b)) return false;
      if (in(f, a) && in(f, b) && !in(f, a & b)) return false;
    }
  for (std::size_t a = 0; a < m; ++a)
    if (!in(f, a) && !in(f, (m - 1) & ~a)) return false;
  return true;
}

/// Every family over the n-atom algebra passing the predicate.
template <class Pred>
std::vector<std::uint32_t> families(std::size_t n, Pred&& pred) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::uint32_t> out;
  // 0 never belongs, so only families over the nonzero elements are tried
  for (std::uint64_t g = 0; g < (std::uint64_t{1} << (m - 1)); ++g) {
    const auto f = static_cast<std::uint32_t>(g << 1);
    if (pred(f)) out.push_back(f);
  }
  return out;
}

/// The family {a : a meets atoms} of a grill given by its atom set.
inline std::uint32_t family_of(std::size_t n, AtomSet atoms) {
  std::uint32_t f = 0;
  for (std::size_t a = 0; a < (std::size_t{1} << n); ++a)
    if ((a & atoms) != 0) f |= std::uint32_t{1} << a;
  return f;
}

// ---------------------------------------------------------------------------
// Finite spaces from their closed sets

/// All closed sets generated by the base: close base + {empty, X} under
/// binary unions and intersections.
inline std::vector<PointSet> closed_lattice(std::size_t n, const std::vector<PointSet>& base) {
  std::vector<PointSet> sets;
  std::unordered_set<PointSet> seen;
  std::vector<PointSet> work = {0, cwb::full_mask<PointSet>(n)};
  work.insert(work.end(), base.begin(), base.end());
  while (!work.empty()) {
    const PointSet s = work.back();
    work.pop_back();
    if (!seen.insert(s).second) continue;
    for (PointSet t : sets) {
      if (!seen.count(s | t)) work.push_back(s | t);
      if (!seen.count(s & t)) work.push_back(s & t);
    }
    sets.push_back(s);
  }
  return sets;
}

/// With a union-closed base the closed sets are the intersections of base
/// members, so closure_in_base is the closure.
inline bool union_closed(const std::vector<PointSet>& base) {
  std::unordered_set<PointSet> seen(base.begin(), base.end());
  for (PointSet a : base)
    for (PointSet b : base)
      if (!seen.count(a | b)) return false;
  return true;
}

inline PointSet closure_in_base(std::size_t n, const std::vector<PointSet>& base, PointSet s) {
  PointSet out = cwb::full_mask<PointSet>(n);
  for (PointSet b : base)
    if ((s & ~b) == 0) out &= b;
  return out;
}

struct Space {
  std::size_t n = 0;
  std::vector<PointSet> closed;

  PointSet full() const { return cwb::full_mask<PointSet>(n); }
  bool is_closed(PointSet s) const {
    for (PointSet c : closed)
      if (c == s) return true;
    return false;
  }
  bool is_open(PointSet s) const { return is_closed(full() & ~s); }
  PointSet closure(PointSet s) const {
    PointSet out = full();
    for (PointSet c : closed)
      if ((s & ~c) == 0) out &= c;
    return out;
  }
  PointSet interior(PointSet s) const { return full() & ~closure(full() & ~s); }
  std::vector<PointSet> open_sets() const {
    std::vector<PointSet> out;
    for (PointSet c : closed) out.push_back(full() & ~c);
    return out;
  }
};

inline Space space_from_base(std::size_t n, const std::vector<PointSet>& base) {
  return Space{n, closed_lattice(n, base)};
}

inline bool continuous(const Space& x, const Space& y, const std::vector<std::size_t>& f) {
  for (PointSet c : y.closed) {
    PointSet pre = 0;
    for (std::size_t i = 0; i < x.n; ++i)
      if ((c >> f[i]) & 1U) pre |= PointSet{1} << i;
    if (!x.is_closed(pre)) return false;
  }
  return true;
}

inline PointSet image(const std::vector<std::size_t>& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if ((s >> i) & 1U) out |= PointSet{1} << f[i];
  return out;
}

/// Injective, continuous, and every closed set of x is the trace of a
/// closed set of y on the image.
inline bool embedding(const Space& x, const Space& y, const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (f[i] == f[j]) return false;
  if (!continuous(x, y, f)) return false;
  const PointSet img = image(f, x.full());
  for (PointSet c : x.closed) {
    bool found = false;
    for (PointSet d : y.closed) found = found || (d & img) == image(f, c);
    if (!found) return false;
  }
  return true;
}

inline bool connected(const Space& x) {
  for (PointSet c : x.closed)
    if (c != 0 && c != x.full() && x.is_open(c)) return false;
  return true;
}

inline bool t0(const Space& x) {
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = i + 1; j < x.n; ++j)
      if (x.closure(PointSet{1} << i) == x.closure(PointSet{1} << j)) return false;
  return true;
}

/// Regular closed sets cl(int F) = F.
inline std::vector<PointSet> regular_closed(const Space& x) {
  std::vector<PointSet> out;
  for (PointSet c : x.closed)
    if (x.closure(x.interior(c)) == c) out.push_back(c);
  return out;
}

/// x in cl U and x in cl V imply x in cl(U meet V), for all open U, V.
inline PointSet u_points(const Space& x) {
  const auto opens = x.open_sets();
  PointSet out = 0;
  for (std::size_t p = 0; p < x.n; ++p) {
    bool ok = true;
    for (PointSet u : opens)
      for (PointSet v : opens)
        if (((x.closure(u) >> p) & 1U) && ((x.closure(v) >> p) & 1U) && !((x.closure(u & v) >> p) & 1U)) ok = false;
    if (ok) out |= PointSet{1} << p;
  }
  return out;
}

/// int(cl U meet cl V) = int(cl(U meet V)) for all open U, V.
inline bool de_vries(const Space& x) {
  const auto opens = x.open_sets();
  for (PointSet u : opens)
    for (PointSet v : opens)
      if (x.interior(x.closure(u) & x.closure(v)) != x.interior(x.closure(u & v))) return false;
  return true;
}

}  // namespace oracle
