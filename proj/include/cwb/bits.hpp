#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cwb {

/// Set of atom indices of an algebra; bit i stands for atom i.
using AtomSet = std::uint32_t;
/// Set of point indices of a finite space; bit i stands for point i.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 16;
inline constexpr std::size_t kMaxPoints = 64;

template <class Mask>
constexpr Mask bit(std::size_t i) {
  return Mask{1} << i;
}

template <class Mask>
constexpr bool has(Mask s, std::size_t i) {
  return ((s >> i) & Mask{1}) != 0;
}

template <class Mask>
constexpr Mask full_mask(std::size_t n) {
  return n >= sizeof(Mask) * 8 ? ~Mask{0} : static_cast<Mask>((Mask{1} << n) - 1);
}

template <class Mask>
constexpr bool is_subset(Mask a, Mask b) {
  return (a & ~b) == 0;
}

template <class Mask>
constexpr int popcount(Mask s) {
  return std::popcount(s);
}

template <class Mask, class Fn>
void for_each_bit(Mask s, Fn&& fn) {
  while (s != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

template <class Mask>
std::vector<std::size_t> indices_of(Mask s) {
  std::vector<std::size_t> out;
  for_each_bit(s, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Shortlex order on index sets: smaller sets first, equal sizes compared
/// lexicographically on their ascending index sequences.
template <class Mask>
bool shortlex_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

/// "{n1,n2}" rendering of a set against a name table.
template <class Mask>
std::string set_label(Mask s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += names.at(i);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace cwb
