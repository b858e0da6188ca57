#pragma once

// Conversions between library values and the oracle encodings.

#include <optional>
#include <vector>

#include "cwb/finite_space.hpp"
#include "cwb/precontact.hpp"
#include "oracles.hpp"

namespace testing {

inline cwb::PrecontactRel rel_from_core(const cwb::Algebra& alg, const oracle::Core& core) {
  cwb::BinaryRelation r(alg.size());
  for (std::size_t p = 0; p < alg.size(); ++p)
    for (std::size_t q = 0; q < alg.size(); ++q)
      if (core[p][q]) r.insert(p, q);
  return cwb::PrecontactRel(alg, r);
}

inline oracle::Core core_of(const cwb::PrecontactRel& rel) {
  const std::size_t n = rel.algebra().size();
  oracle::Core c(n, std::vector<bool>(n, false));
  for (auto [p, q] : rel.core().pairs()) c[p][q] = true;
  return c;
}

inline cwb::RelationTable table_of(const cwb::Algebra& alg, const oracle::Table& t) {
  cwb::RelationTable out(alg);
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b]) out.set(static_cast<cwb::AtomSet>(a), static_cast<cwb::AtomSet>(b));
  return out;
}

inline oracle::Table oracle_table(const cwb::PrecontactRel& rel) {
  return oracle::table_from_core(rel.algebra().size(), core_of(rel));
}

/// The oracle space with the library space's point closures as base.
inline oracle::Space oracle_space(const cwb::FiniteSpace& x) {
  std::vector<cwb::PointSet> base;
  for (std::size_t i = 0; i < x.size(); ++i) base.push_back(x.point_closure(i));
  return oracle::space_from_base(x.size(), base);
}

inline std::vector<std::vector<std::size_t>> all_functions(std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < from; ++i) total *= to;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(from);
    std::size_t c = code;
    for (std::size_t i = 0; i < from; ++i, c /= to) f[i] = c % to;
    out.push_back(f);
  }
  return out;
}

/// Every function from -> to agreeing with the embeddings: f(ea[y]) = eb[y].
inline std::vector<std::vector<std::size_t>> functions_fixing(std::size_t from, std::size_t to,
                                                              const std::vector<std::size_t>& ea,
                                                              const std::vector<std::size_t>& eb) {
  std::vector<std::optional<std::size_t>> forced(from);
  for (std::size_t y = 0; y < ea.size(); ++y) forced[ea[y]] = eb[y];
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < from; ++i)
    if (!forced[i]) free.push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : all_functions(free.size(), to)) {
    std::vector<std::size_t> f(from);
    for (std::size_t i = 0; i < from; ++i)
      if (forced[i]) f[i] = *forced[i];
    for (std::size_t k = 0; k < free.size(); ++k) f[free[k]] = g[k];
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace testing
