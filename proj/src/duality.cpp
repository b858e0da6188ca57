#include "cwb/duality.hpp"

#include <algorithm>
#include <map>

#include "cwb/error.hpp"
#include "cwb/points.hpp"

namespace cwb {

namespace {

/// Backtracking over point functions source -> target in index order.
/// `allowed(x)` bounds the candidates of x; the visitor returns false to stop.
void search_maps(const FiniteSpace& source, const FiniteSpace& target,
                 const std::vector<std::optional<std::size_t>>& forced, bool embedding,
                 const std::function<PointSet(std::size_t)>& allowed,
                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = source.size();
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < n; ++x)
    if (forced.size() > x && forced[x]) order.push_back(x);
  for (std::size_t x = 0; x < n; ++x)
    if (!(forced.size() > x && forced[x])) order.push_back(x);

  std::vector<std::size_t> map(n, 0);
  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (stop) return;
    if (k == n) {
      stop = !visit(map);
      return;
    }
    const std::size_t x = order[k];
    PointSet candidates = allowed(x);
    if (forced.size() > x && forced[x]) candidates &= bit<PointSet>(*forced[x]);
    for_each_bit(candidates, [&](std::size_t y) {
      if (stop) return;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t x2 = order[j];
        const std::size_t y2 = map[x2];
        if (embedding) {
          if (y == y2) return;
          if (source.below(x, x2) != target.below(y, y2)) return;
          if (source.below(x2, x) != target.below(y2, y)) return;
        } else {
          if (source.below(x, x2) && !target.below(y, y2)) return;
          if (source.below(x2, x) && !target.below(y2, y)) return;
        }
      }
      map[x] = y;
      assign(k + 1);
    });
  };
  if (n == 0) {
    visit(map);
    return;
  }
  assign(0);
}

bool is_identity(const std::vector<std::size_t>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& second, const std::vector<std::size_t>& first) {
  std::vector<std::size_t> out;
  for (std::size_t v : first) out.push_back(second.at(v));
  return out;
}

std::string map_label(const std::vector<std::size_t>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + "]";
}

}  // namespace

bool is_two_map(const TwoMap& f) {
  const SpaceMap m = f.space_map();
  return is_continuous(m) && is_subset(m.image(f.source.x0), f.target.x0);
}

std::vector<std::vector<std::size_t>> all_two_maps(const TopPair& source, const TopPair& target) {
  std::vector<std::vector<std::size_t>> out;
  search_maps(
      source.space, target.space, {}, false,
      [&](std::size_t x) { return has(source.x0, x) ? target.x0 : target.space.full(); },
      [&](const std::vector<std::size_t>& m) {
        out.push_back(m);
        return true;
      });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::optional<std::vector<std::size_t>> extend_map(const FiniteSpace& source, const FiniteSpace& target,
                                                   const std::vector<std::optional<std::size_t>>& forced,
                                                   bool embedding) {
  std::optional<std::vector<std::size_t>> found;
  search_maps(
      source, target, forced, embedding, [&](std::size_t) { return target.full(); },
      [&](const std::vector<std::size_t>& m) {
        found = m;
        return false;
      });
  return found;
}

// ---------------------------------------------------------------------------
// Duality functors

RegionAlgebra dt_object(const TopPair& pair) { return rc_pair(pair); }

std::vector<AtomSet> dt_element_map(const TwoMap& f, bool intersect_x0) {
  const RegionAlgebra dq = rc_pair(f.target);
  const RegionAlgebra dp = rc_pair(f.source);
  const SpaceMap m = f.space_map();
  std::vector<AtomSet> out;
  for (AtomSet g = 0; g < dq.algebra.element_count(); ++g) {
    PointSet pre = m.preimage(dq.region(g));
    if (intersect_x0) pre &= f.source.x0;
    auto e = dp.element_of(f.source.space.closure(pre));
    out.push_back(e ? *e : kNoElement);
  }
  return out;
}

BoolHom dt_morphism(const TwoMap& f) {
  if (!is_two_map(f)) throw Error("not a 2-map: " + map_label(f.map));
  auto hom = hom_from_element_map(rc_pair(f.target).algebra, rc_pair(f.source).algebra, dt_element_map(f));
  if (!hom) throw Error("Dt image of " + map_label(f.map) + " is not a homomorphism");
  return *hom;
}

CanonicalSpace da_object(const Algebra& algebra) { return canonical_stone2(algebra); }

TwoMap da_morphism(const BoolHom& phi) {
  const CanonicalSpace from = canonical_stone2(phi.target());
  const CanonicalSpace to = canonical_stone2(phi.source());
  std::vector<std::size_t> map;
  for (AtomSet grill : from.points) {
    AtomSet pre = 0;
    for (std::size_t p = 0; p < phi.source().size(); ++p)
      if ((phi.apply(bit<AtomSet>(p)) & grill) != 0) pre |= bit<AtomSet>(p);
    map.push_back(*to.point_of(pre));
  }
  return {from.pair(), to.pair(), std::move(map)};
}

std::vector<std::size_t> natural_t(const TopPair& pair) {
  const RegionAlgebra d = rc_pair(pair);
  const CanonicalSpace back = canonical_stone2(d.algebra);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < pair.space.size(); ++x) {
    auto p = back.point_of(sigma(d, x));
    if (!p) throw Error("sigma of " + pair.space.name(x) + " is not a grill");
    out.push_back(*p);
  }
  return out;
}

std::vector<AtomSet> natural_g(const Algebra& algebra) {
  const CanonicalSpace da = canonical_stone2(algebra);
  const RegionAlgebra d = rc_pair(da.pair());
  std::vector<AtomSet> out;
  for (AtomSet a = 0; a < algebra.element_count(); ++a) {
    auto e = d.element_of(da.g(a));
    out.push_back(e ? *e : kNoElement);
  }
  return out;
}

namespace {

struct Tally {
  Check check;
  std::size_t cases = 0;

  explicit Tally(std::string name) : check{std::move(name), true} {}
  void record(bool ok, const std::function<std::string()>& witness) {
    ++cases;
    if (!ok && check.passed) {
      check.passed = false;
      check.witness = witness();
    }
  }
  Check done() {
    check.note = std::to_string(cases) + " cases";
    return check;
  }
};

/// Da applied to an element map given literally: Gamma -> psi^{-1}(Gamma),
/// or nothing when the preimage is not a grill of the source algebra.
std::optional<AtomSet> grill_preimage(const Algebra& source, const std::vector<AtomSet>& psi, AtomSet grill) {
  ElementFamily family;
  for (AtomSet a = 0; a < source.element_count(); ++a)
    if (psi[a] != kNoElement && (psi[a] & grill) != 0) family.push_back(a);
  if (!check_point_family(source, family, PointKind::grill).passed()) return std::nullopt;
  return normalize_family(source, family);
}

/// Da(Dt(f)) after t_P = t_Q after f, with Dt(f) given as an element map.
bool t_square_commutes(const TwoMap& f, const std::vector<AtomSet>& dt_f, std::string* where) {
  const RegionAlgebra dq = rc_pair(f.target);
  const RegionAlgebra dp = rc_pair(f.source);
  const auto t_p = natural_t(f.source);
  const auto t_q = natural_t(f.target);
  const CanonicalSpace dadt_p = canonical_stone2(dp.algebra);
  const CanonicalSpace dadt_q = canonical_stone2(dq.algebra);
  for (std::size_t x = 0; x < f.map.size(); ++x) {
    auto pre = grill_preimage(dq.algebra, dt_f, dadt_p.points[t_p[x]]);
    if (!pre || dadt_q.point_of(*pre) != t_q[f.map[x]]) {
      if (where) *where = "x=" + f.source.space.name(x);
      return false;
    }
  }
  return true;
}

}  // namespace

Report verify_duality(const DualityOptions& options) {
  Report report("connected Stone duality");
  std::vector<Algebra> algebras;
  std::vector<CanonicalSpace> spaces;
  std::vector<RegionAlgebra> dts;
  for (std::size_t n = 0; n <= options.max_atoms; ++n) {
    algebras.push_back(Algebra::with_default_names(n));
    spaces.push_back(canonical_stone2(algebras.back()));
    dts.push_back(rc_pair(spaces.back().pair()));
  }
  const std::size_t k = algebras.size();
  auto dt_map = [&](const TwoMap& f) {
    return options.dt_override ? options.dt_override(f) : dt_element_map(f);
  };

  // homs[i][j]: all homomorphisms B_i -> B_j
  std::vector<std::vector<std::vector<BoolHom>>> homs(k, std::vector<std::vector<BoolHom>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) homs[i][j] = all_homs(algebras[i], algebras[j]);

  Tally t_iso("t is an S2S-isomorphism"), g_iso("g is a Boolean isomorphism");
  for (std::size_t i = 0; i < k; ++i) {
    const TopPair& p = spaces[i].pair();
    const auto t = natural_t(p);
    const CanonicalSpace back = canonical_stone2(dts[i].algebra);
    const SpaceMap tm{p.space, back.space(), t};
    t_iso.record(is_homeomorphism(tm) && tm.image(p.x0) == back.pair().x0,
                 [&] { return "B" + std::to_string(i) + ": t=" + map_label(t); });
    const auto g = natural_g(algebras[i]);
    const bool in_range = std::find(g.begin(), g.end(), kNoElement) == g.end();
    auto sorted = g;
    std::sort(sorted.begin(), sorted.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    g_iso.record(in_range && injective && element_map_check(algebras[i], dts[i].algebra, g).passed(),
                 [&] { return "B" + std::to_string(i); });
  }

  Tally da_id("Da preserves identities"), da_comp("Da reverses composition"), da_two("Da yields 2-maps"),
      da_faithful("Da is faithful");
  // two_maps[i][j]: all 2-maps Da(B_i) -> Da(B_j)
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> two_maps(
      k, std::vector<std::vector<std::vector<std::size_t>>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    da_id.record(is_identity(da_morphism(BoolHom::identity(algebras[i])).map),
                 [&] { return "B" + std::to_string(i); });
    for (std::size_t j = 0; j < k; ++j) {
      two_maps[i][j] = all_two_maps(spaces[i].pair(), spaces[j].pair());
      // homs B_j -> B_i dualize to 2-maps Da(B_i) -> Da(B_j)
      std::vector<std::vector<std::size_t>> images;
      for (const BoolHom& phi : homs[j][i]) {
        const TwoMap f = da_morphism(phi);
        da_two.record(is_two_map(f), [&] { return "phi=" + map_label(phi.point_map()); });
        images.push_back(f.map);
      }
      std::sort(images.begin(), images.end());
      auto all = two_maps[i][j];
      std::sort(all.begin(), all.end());
      da_faithful.record(std::includes(all.begin(), all.end(), images.begin(), images.end()) &&
                             std::adjacent_find(images.begin(), images.end()) == images.end(),
                         [&] { return "Da(B" + std::to_string(i) + ") -> Da(B" + std::to_string(j) + ")"; });
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (const BoolHom& phi : homs[a][b])
          for (const BoolHom& psi : homs[b][c]) {
            const auto lhs = da_morphism(psi.after(phi)).map;
            const auto rhs = compose(da_morphism(phi).map, da_morphism(psi).map);
            da_comp.record(lhs == rhs, [&] {
              return "phi=" + map_label(phi.point_map()) + ", psi=" + map_label(psi.point_map());
            });
          }

  Tally dt_id("Dt preserves identities"), dt_hom("Dt yields homomorphisms"), dt_comp("Dt reverses composition"),
      nat_t("naturality of t"), nat_g("naturality of g");
  // Dt element maps of every 2-map, cached
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<AtomSet>>> dt_cache;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& m : two_maps[i][j]) {
        const TwoMap f{spaces[i].pair(), spaces[j].pair(), m};
        auto el = dt_map(f);
        const bool total = std::find(el.begin(), el.end(), kNoElement) == el.end();
        dt_hom.record(total && element_map_check(dts[j].algebra, dts[i].algebra, el).passed(),
                      [&] { return "f=" + map_label(m); });
        if (i == j && is_identity(m)) {
          bool id = true;
          for (AtomSet a = 0; a < el.size(); ++a) id = id && el[a] == a;
          dt_id.record(id, [&] { return "B" + std::to_string(i); });
        }
        dt_cache[{i, j}].push_back(std::move(el));
      }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t u = 0; u < two_maps[a][b].size(); ++u)
          for (std::size_t v = 0; v < two_maps[b][c].size(); ++v) {
            const auto& f = two_maps[a][b][u];
            const auto& g = two_maps[b][c][v];
            const auto gf = compose(g, f);
            const auto lhs = dt_map(TwoMap{spaces[a].pair(), spaces[c].pair(), gf});
            const auto& dt_f = dt_cache[{a, b}][u];
            const auto& dt_g = dt_cache[{b, c}][v];
            std::vector<AtomSet> rhs;
            for (AtomSet e : dt_g) rhs.push_back(e == kNoElement ? kNoElement : dt_f[e]);
            dt_comp.record(lhs == rhs, [&] { return "f=" + map_label(f) + ", g=" + map_label(g); });
          }

  // Da(Dt(f)) after t_P = t_Q after f, for f = Da(phi)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (const BoolHom& phi : homs[j][i]) {
        const TwoMap f = da_morphism(phi);
        std::string where;
        const bool ok = t_square_commutes(f, dt_map(f), &where);
        nat_t.record(ok, [&] { return "f=" + map_label(f.map) + " at " + where; });
      }

  // Dt(Da(phi)) after g_A = g_B after phi
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      const auto g_a = natural_g(algebras[a]);
      const auto g_b = natural_g(algebras[b]);
      for (const BoolHom& phi : homs[a][b]) {
        const auto dtda = dt_map(da_morphism(phi));
        bool ok = true;
        std::string where;
        for (AtomSet e = 0; e < algebras[a].element_count() && ok; ++e) {
          const AtomSet lhs = g_a[e] == kNoElement ? kNoElement : dtda[g_a[e]];
          ok = lhs == g_b[phi.apply(e)];
          if (!ok) where = "a=" + algebras[a].label(e);
        }
        nat_g.record(ok, [&] { return "phi=" + map_label(phi.point_map()) + " at " + where; });
      }
    }

  for (Tally* t : {&t_iso, &g_iso, &da_id, &da_comp, &da_two, &da_faithful, &dt_id, &dt_hom, &dt_comp, &nat_t, &nat_g})
    report.add(t->done());
  return report;
}

Report two_map_audit(std::size_t max_atoms) {
  Report report("continuous 2-maps between canonical Stone 2-spaces");
  std::vector<Algebra> algebras;
  std::vector<CanonicalSpace> spaces;
  for (std::size_t n = 0; n <= max_atoms; ++n) {
    algebras.push_back(Algebra::with_default_names(n));
    spaces.push_back(canonical_stone2(algebras.back()));
  }
  Tally full("every continuous 2-map is Da of a homomorphism"), faithful("Da is faithful"),
      natural("naturality of t over all continuous 2-maps"),
      exact("naturality of t holds exactly on the Da image"),
      restriction("Dt(f) depends only on f restricted to X0");
  std::size_t outside = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = 0; j < spaces.size(); ++j) {
      std::vector<std::vector<std::size_t>> images;
      for (const BoolHom& phi : all_homs(algebras[j], algebras[i])) images.push_back(da_morphism(phi).map);
      std::sort(images.begin(), images.end());
      faithful.record(std::adjacent_find(images.begin(), images.end()) == images.end(),
                      [&] { return "B" + std::to_string(j) + " -> B" + std::to_string(i); });
      const auto maps = all_two_maps(spaces[i].pair(), spaces[j].pair());
      for (const auto& m : maps) {
        const TwoMap f{spaces[i].pair(), spaces[j].pair(), m};
        const bool in_image = std::binary_search(images.begin(), images.end(), m);
        if (!in_image) ++outside;
        full.record(in_image, [&] { return "f=" + map_label(m) + " on Da(B" + std::to_string(i) + ")"; });
        std::string where;
        const bool ok = t_square_commutes(f, dt_element_map(f), &where);
        natural.record(ok, [&] { return "f=" + map_label(m) + " on Da(B" + std::to_string(i) + ") at " + where; });
        exact.record(ok == in_image, [&] { return "f=" + map_label(m); });
        // the Da map with the same restriction to X0 has the same Dt image
        for (const auto& g : images) {
          bool same_on_x0 = true;
          for_each_bit(f.source.x0, [&](std::size_t x) { same_on_x0 = same_on_x0 && g[x] == m[x]; });
          if (same_on_x0)
            restriction.record(dt_element_map(TwoMap{f.source, f.target, g}) == dt_element_map(f),
                               [&] { return "f=" + map_label(m) + ", g=" + map_label(g); });
        }
      }
    }
  for (Tally* t : {&faithful, &full, &natural, &exact, &restriction}) report.add(t->done());
  report.add("continuous 2-maps outside the Da image", true, {}, std::to_string(outside));
  return report;
}

// ---------------------------------------------------------------------------
// Extremally connected spaces

TopPair e1(const FiniteSpace& space) { return {space, u_points(space)}; }
FiniteSpace e2(const TopPair& pair) { return pair.space; }
FiniteSpace dac_object(const Algebra& algebra) { return e2(canonical_stone2(algebra).pair()); }
RegionAlgebra dtc_object(const FiniteSpace& space) { return regular_closed(space); }

bool is_ecc_morphism(const SpaceMap& f) {
  return is_continuous(f) && is_subset(f.image(u_points(f.source)), u_points(f.target));
}

Report ecc_check(const Algebra& algebra) {
  Report report("extremally connected duality");
  const CanonicalSpace da = canonical_stone2(algebra);
  const FiniteSpace x = dac_object(algebra);
  const TopPair p = e1(x);
  report.add("Dac(A) extremally connected", is_extremally_connected(x));
  report.add("E1(X) is a Stone 2-space", check_s2s(p).passed());
  report.add("u-points extremally disconnected", is_extremally_disconnected(subspace(x, p.x0)));
  report.add("E2 E1 = id", e2(p) == x);
  report.add("E1 E2 = id", e1(e2(da.pair())).x0 == da.pair().x0, "u-points differ from the ultrafilters");

  const RegionAlgebra rc = dtc_object(x);
  bool g_ok = rc.algebra.size() == algebra.size();
  std::vector<AtomSet> g;
  for (AtomSet a = 0; g_ok && a < algebra.element_count(); ++a) {
    auto e = rc.element_of(da.g(a));
    g_ok = e.has_value();
    if (g_ok) g.push_back(*e);
  }
  g_ok = g_ok && element_map_check(algebra, rc.algebra, g).passed();
  report.add("Dtc Dac A isomorphic to A", g_ok);
  if (x.size() <= 10) {
    const CanonicalSpace back = canonical_stone2(rc.algebra);
    report.add("Dac Dtc X homeomorphic to X", s2s_isomorphism(p, back.pair()).has_value());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Extensions

Extension build_extension(const FiniteSpace& base, const PrecontactRel& contact) {
  if (!is_discrete(base)) throw InputError("extension base must be a discrete space");
  if (contact.algebra().atoms() != base.names())
    throw InputError("contact relation must live on the powerset algebra of the base points");
  CanonicalSpace space = canonical_2cs(contact);
  std::vector<std::size_t> embedding;
  for (std::size_t y = 0; y < base.size(); ++y) embedding.push_back(*space.point_of(bit<AtomSet>(y)));
  return {base, contact, std::move(space), std::move(embedding)};
}

Extension build_extension(const PrecontactRel& contact) {
  return build_extension(FiniteSpace::discrete(contact.algebra().atoms()), contact);
}

PrecontactRel recovered_contact(const Extension& ext) {
  const std::size_t n = ext.base.size();
  BinaryRelation core(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if ((ext.total().point_closure(ext.embedding[p]) & ext.total().point_closure(ext.embedding[q])) != 0)
        core.insert(p, q);
  return PrecontactRel(ext.contact.algebra(), std::move(core));
}

Report extension_check(const Extension& ext) {
  Report report("extension");
  const SpaceMap c{ext.base, ext.total(), ext.embedding};
  report.add("dense embedding", is_embedding(c) && is_dense(ext.total(), c.image(ext.base.full())));
  report.add("C-semiregular", is_C_semiregular(ext.total()));
  const Algebra& alg = ext.contact.algebra();
  Check rec{"contact recovered from closures", true};
  for (AtomSet f = 0; f < alg.element_count() && rec.passed; ++f)
    for (AtomSet g = 0; g < alg.element_count() && rec.passed; ++g) {
      const bool meet = (ext.total().closure(c.image(f)) & ext.total().closure(c.image(g))) != 0;
      if (meet != ext.contact.holds(f, g)) rec = {rec.name, false, "F=" + alg.label(f) + ", G=" + alg.label(g)};
    }
  report.add(rec);
  return report;
}

namespace {

std::vector<std::optional<std::size_t>> forced_by(const Extension& from, const Extension& to) {
  std::vector<std::optional<std::size_t>> forced(from.total().size());
  for (std::size_t y = 0; y < from.embedding.size(); ++y) forced[from.embedding[y]] = to.embedding[y];
  return forced;
}

/// The same extension with its total space points listed in reverse.
Extension reversed(const Extension& ext) {
  const FiniteSpace& x = ext.total();
  const std::size_t n = x.size();
  auto flip = [&](PointSet s) {
    PointSet out = 0;
    for_each_bit(s, [&](std::size_t i) { out |= bit<PointSet>(n - 1 - i); });
    return out;
  };
  std::vector<std::string> names;
  std::vector<PointSet> base;
  std::vector<AtomSet> points;
  for (std::size_t i = n; i-- > 0;) {
    names.push_back(x.name(i));
    base.push_back(flip(x.point_closure(i)));
    points.push_back(ext.space.points[i]);
  }
  Extension out = ext;
  BinaryRelation r(n);
  for (auto [a, b] : ext.space.pcs.r.pairs()) r.insert(n - 1 - a, n - 1 - b);
  out.space.points = std::move(points);
  out.space.pcs = TwoPCS{TopPair{FiniteSpace::generate(std::move(names), base), flip(ext.space.pair().x0)}, r};
  for (auto& e : out.embedding) e = n - 1 - e;
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> projective_witness(const Extension& a, const Extension& b) {
  return extend_map(b.total(), a.total(), forced_by(b, a), false);
}

std::optional<std::vector<std::size_t>> injective_witness(const Extension& a, const Extension& b) {
  return extend_map(a.total(), b.total(), forced_by(a, b), true);
}

std::optional<std::vector<std::size_t>> equivalence_witness(const Extension& a, const Extension& b) {
  if (a.total().size() != b.total().size()) return std::nullopt;
  return injective_witness(a, b);
}

ExtensionPoset extension_poset(const FiniteSpace& base) {
  if (base.size() > 4) throw CapError("extension posets are limited to 4 base points");
  ExtensionPoset out;
  out.report = Report("extension poset");
  const Algebra alg(base.names());
  enumerate_contact_relations(alg, [&](const PrecontactRel& c) { out.records.push_back(build_extension(base, c)); });
  const std::size_t m = out.records.size();
  const std::size_t n = base.size();
  out.leq.assign(m, std::vector<bool>(m, false));
  out.leq_in.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      out.leq[i][j] = projective_witness(out.records[i], out.records[j]).has_value();
      out.leq_in[i][j] = injective_witness(out.records[i], out.records[j]).has_value();
    }

  Report& r = out.report;
  auto core_label = [&](std::size_t i) {
    std::string s;
    for (auto [p, q] : out.records[i].contact.core().pairs())
      if (p < q) s += (s.empty() ? "" : " ") + alg.atom(p) + alg.atom(q);
    return "{" + s + "}";
  };
  r.add("one extension per contact relation", m == (std::size_t{1} << (n * (n - 1) / 2)), {},
        std::to_string(m) + " extensions");
  Check valid{"every extension is a dense C-semiregular embedding", true};
  for (std::size_t i = 0; i < m && valid.passed; ++i)
    if (const Check* bad = extension_check(out.records[i]).first_failure())
      valid = {valid.name, false, "C=" + core_label(i) + ": " + bad->name};
  r.add(valid);

  Check in_order{"<=_in matches inclusion of contact relations", true};
  Check proj_order{"<= matches reverse inclusion", true};
  Check distinct{"distinct relations give inequivalent extensions", true};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const bool sub = out.records[i].contact.core().subset_of(out.records[j].contact.core());
      const bool sup = out.records[j].contact.core().subset_of(out.records[i].contact.core());
      const std::string w = "C1=" + core_label(i) + ", C2=" + core_label(j);
      if (in_order.passed && out.leq_in[i][j] != sub) in_order = {in_order.name, false, w};
      if (proj_order.passed && out.leq[i][j] != sup) proj_order = {proj_order.name, false, w};
      if (i != j && distinct.passed && equivalence_witness(out.records[i], out.records[j]))
        distinct = {distinct.name, false, w};
    }
  r.add(in_order);
  r.add(proj_order);
  r.add(distinct);

  const Extension& smallest = out.records.front();
  const Extension& largest = out.records.back();
  bool small_ok = smallest.total().size() == n && is_homeomorphism({base, smallest.total(), smallest.embedding});
  for (std::size_t j = 0; j < m; ++j) small_ok = small_ok && out.leq_in[0][j];
  r.add("(Y,id) is the <=_in-smallest", small_ok);
  bool large_ok = is_extremally_connected(largest.total());
  for (std::size_t i = 0; i < m; ++i) large_ok = large_ok && out.leq_in[i][m - 1];
  std::vector<AtomSet> grill_sets;
  for (const auto& g : grills(alg)) grill_sets.push_back(g.atoms);
  large_ok = large_ok && largest.space.points == grill_sets;
  r.add("gamma Y is the <=_in-largest and extremally connected", large_ok);

  Check ec{"extremally connected extensions are equivalent to gamma Y", true};
  for (std::size_t i = 0; i < m; ++i)
    if (is_extremally_connected(out.records[i].total()) && !equivalence_witness(out.records[i], largest))
      ec = {ec.name, false, "C=" + core_label(i)};
  r.add(ec);

  Check reps{"equivalent copies are order-indistinguishable", true};
  for (std::size_t i = 0; i < m && reps.passed; ++i) {
    const Extension copy = reversed(out.records[i]);
    if (!equivalence_witness(out.records[i], copy) || !extension_check(copy).passed()) {
      reps = {reps.name, false, "copy of C=" + core_label(i)};
      break;
    }
    for (std::size_t j = 0; j < m && reps.passed; ++j) {
      const Extension& other = out.records[j];
      const bool same = projective_witness(copy, other).has_value() == out.leq[i][j] &&
                        projective_witness(other, copy).has_value() == out.leq[j][i] &&
                        injective_witness(copy, other).has_value() == out.leq_in[i][j] &&
                        injective_witness(other, copy).has_value() == out.leq_in[j][i];
      if (!same) reps = {reps.name, false, "copy of C=" + core_label(i) + " against C=" + core_label(j)};
    }
  }
  r.add(reps);
  return out;
}

GammaMap gamma_extend_map(const FiniteSpace& x, const FiniteSpace& y, const std::vector<std::size_t>& f) {
  if (f.size() != x.size()) throw InputError("map is not total");
  const BoolHom phi_f(Algebra(y.names()), Algebra(x.names()), f);
  const TwoMap gf = da_morphism(phi_f);
  GammaMap out{canonical_stone2(phi_f.target()), canonical_stone2(phi_f.source()), gf.map, Report("gamma extension")};
  out.report.add("gamma f continuous", is_continuous(gf.space_map()));
  Check square{"gamma_Y after f = gamma f after gamma_X", true};
  for (std::size_t p = 0; p < x.size(); ++p) {
    const std::size_t lhs = *out.gy.point_of(bit<AtomSet>(f[p]));
    const std::size_t rhs = gf.map[*out.gx.point_of(bit<AtomSet>(p))];
    if (lhs != rhs && square.passed) square = {square.name, false, "x=" + x.name(p)};
  }
  out.report.add(square);
  Check image{"gamma f is the image map on grills", true};
  for (std::size_t i = 0; i < out.gx.points.size(); ++i) {
    AtomSet img = 0;
    for_each_bit(out.gx.points[i], [&](std::size_t p) { img |= bit<AtomSet>(f[p]); });
    if (out.gy.points[gf.map[i]] != img && image.passed) image = {image.name, false, out.gx.space().name(i)};
  }
  out.report.add(image);
  return out;
}

std::optional<std::vector<std::size_t>> extend_into(const Extension& ext, const FiniteSpace& z,
                                                    const std::vector<std::size_t>& f) {
  std::vector<std::optional<std::size_t>> forced(ext.total().size());
  for (std::size_t p = 0; p < f.size(); ++p) forced[ext.embedding[p]] = f[p];
  return extend_map(ext.total(), z, forced, false);
}

}  // namespace cwb
