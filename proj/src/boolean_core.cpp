#include "cwb/boolean_core.hpp"

#include <stdexcept>
#include <unordered_set>

#include "cwb/error.hpp"

namespace cwb {

Algebra::Algebra(std::vector<std::string> atoms) {
  if (atoms.size() > kMaxAtoms)
    throw CapError("algebra has " + std::to_string(atoms.size()) + " atoms; the cap is " +
                   std::to_string(kMaxAtoms));
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms) {
    if (a.empty()) throw InputError("empty atom identifier");
    if (!seen.insert(a).second) throw InputError("duplicate atom identifier '" + a + "'");
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(atoms)});
}

Algebra Algebra::with_default_names(std::size_t n) {
  static const char* const kNames[] = {"p", "q", "r", "s", "t", "u", "v", "w", "x", "y", "z"};
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i)
    atoms.push_back(i < std::size(kNames) ? std::string(kNames[i]) : "a" + std::to_string(i));
  return Algebra(std::move(atoms));
}

std::optional<std::size_t> Algebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->atoms.size(); ++i)
    if (impl_->atoms[i] == name) return i;
  return std::nullopt;
}

bool Algebra::operator==(const Algebra& other) const {
  return impl_ == other.impl_ || impl_->atoms == other.impl_->atoms;
}

Element::Element(Algebra algebra, AtomSet atoms) : algebra_(std::move(algebra)), atoms_(atoms) {
  if (!algebra_.contains(atoms_)) throw std::invalid_argument("atom set outside algebra");
}

bool Element::operator==(const Element& other) const {
  return atoms_ == other.atoms_ && algebra_ == other.algebra_;
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw std::invalid_argument("elements " + a.label() + " and " + b.label() +
                                " belong to different algebras");
}

}  // namespace

Element join(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.algebra(), a.atoms() | b.atoms());
}

Element meet(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.algebra(), a.atoms() & b.atoms());
}

Element complement(const Element& a) { return Element(a.algebra(), a.algebra().complement(a.atoms())); }

bool leq(const Element& a, const Element& b) {
  require_same(a, b);
  return is_subset(a.atoms(), b.atoms());
}

Element join_all(const Algebra& algebra, const std::vector<Element>& elements) {
  AtomSet acc = 0;
  for (const auto& e : elements) {
    if (!(e.algebra() == algebra)) throw std::invalid_argument("element from a different algebra");
    acc |= e.atoms();
  }
  return Element(algebra, acc);
}

std::vector<AtomSet> ultrafilters(const Algebra& algebra) {
  std::vector<AtomSet> out;
  for (std::size_t i = 0; i < algebra.size(); ++i) out.push_back(bit<AtomSet>(i));
  return out;
}

AtomSet stone_map(const Algebra& algebra, AtomSet a) {
  if (!algebra.contains(a)) throw std::invalid_argument("element outside algebra");
  return a;
}

BoolHom::BoolHom(Algebra source, Algebra target, std::vector<std::size_t> point_map)
    : source_(std::move(source)), target_(std::move(target)), point_map_(std::move(point_map)) {
  if (point_map_.size() != target_.size())
    throw InputError("point map must assign a source atom to each of the " +
                     std::to_string(target_.size()) + " target atoms");
  for (std::size_t q = 0; q < point_map_.size(); ++q)
    if (point_map_[q] >= source_.size())
      throw InputError("point map sends target atom '" + target_.atom(q) + "' outside the source");
}

BoolHom BoolHom::identity(const Algebra& algebra) {
  std::vector<std::size_t> map(algebra.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return BoolHom(algebra, algebra, std::move(map));
}

AtomSet BoolHom::apply(AtomSet a) const {
  AtomSet out = 0;
  for (std::size_t q = 0; q < point_map_.size(); ++q)
    if (has(a, point_map_[q])) out |= bit<AtomSet>(q);
  return out;
}

Element BoolHom::apply(const Element& a) const {
  if (!(a.algebra() == source_)) throw std::invalid_argument("element is not in the source algebra");
  return Element(target_, apply(a.atoms()));
}

BoolHom BoolHom::after(const BoolHom& first) const {
  if (!(first.target() == source_)) throw std::invalid_argument("homomorphisms are not composable");
  // Dual maps compose in the opposite order.
  std::vector<std::size_t> map(target_.size());
  for (std::size_t r = 0; r < map.size(); ++r) map[r] = first.point_map()[point_map_[r]];
  return BoolHom(first.source(), target_, std::move(map));
}

bool BoolHom::operator==(const BoolHom& other) const {
  return source_ == other.source_ && target_ == other.target_ && point_map_ == other.point_map_;
}

Report element_map_check(const Algebra& source, const Algebra& target,
                         const std::vector<AtomSet>& image) {
  Report report("boolean homomorphism");
  const std::size_t n = source.element_count();
  if (image.size() != n) {
    report.add("total", false, "image table has wrong size");
    return report;
  }
  for (AtomSet v : image)
    if (!target.contains(v)) {
      report.add("total", false, "image outside target algebra");
      return report;
    }
  report.add("zero", image[0] == target.zero(), "phi(0) = " + target.label(image[0]));
  report.add("one", image[source.one()] == target.one(), "phi(1) = " + target.label(image[source.one()]));

  std::string join_witness, meet_witness, compl_witness;
  for (AtomSet a = 0; a < n && compl_witness.empty(); ++a)
    if (image[source.complement(a)] != target.complement(image[a])) compl_witness = source.label(a);
  for (AtomSet a = 0; a < n && (join_witness.empty() || meet_witness.empty()); ++a)
    for (AtomSet b = 0; b < n; ++b) {
      if (join_witness.empty() && image[a | b] != (image[a] | image[b]))
        join_witness = source.label(a) + ", " + source.label(b);
      if (meet_witness.empty() && image[a & b] != (image[a] & image[b]))
        meet_witness = source.label(a) + ", " + source.label(b);
    }
  report.add("join", join_witness.empty(), join_witness);
  report.add("meet", meet_witness.empty(), meet_witness);
  report.add("complement", compl_witness.empty(), compl_witness);
  return report;
}

Report hom_check(const BoolHom& hom) {
  std::vector<AtomSet> image(hom.source().element_count());
  for (AtomSet a = 0; a < image.size(); ++a) image[a] = hom.apply(a);
  return element_map_check(hom.source(), hom.target(), image);
}

std::optional<BoolHom> hom_from_element_map(const Algebra& source, const Algebra& target,
                                            const std::vector<AtomSet>& image) {
  if (!element_map_check(source, target, image).passed()) return std::nullopt;
  std::vector<std::size_t> map(target.size(), 0);
  for (std::size_t q = 0; q < target.size(); ++q) {
    bool found = false;
    for (std::size_t p = 0; p < source.size(); ++p)
      if (has(image[bit<AtomSet>(p)], q)) {
        map[q] = p;
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return BoolHom(source, target, std::move(map));
}

std::vector<BoolHom> all_homs(const Algebra& source, const Algebra& target) {
  std::vector<BoolHom> out;
  const std::size_t m = source.size();
  const std::size_t k = target.size();
  if (m == 0 && k > 0) return out;
  std::vector<std::size_t> map(k, 0);
  while (true) {
    out.emplace_back(source, target, map);
    std::size_t i = 0;
    while (i < k && ++map[i] == m) map[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace cwb
