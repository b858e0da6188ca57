#include "document.hpp"

#include <algorithm>
#include <utility>

namespace workbench {

using cwb::AtomSet;
using cwb::PointSet;

namespace {

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& path, std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(child(path, key), "missing field");
  return *it;
}

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array");
  return v;
}

std::string name_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected a name string");
  auto s = v.get<std::string>();
  if (!is_valid_name(s)) throw ParseError(path, "malformed name \"" + s + "\"");
  return s;
}

std::vector<std::string> names_at(const json& v, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = array_at(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto n = name_at(arr[i], child(path, i));
    if (std::find(out.begin(), out.end(), n) != out.end())
      throw ParseError(child(path, i), "duplicate name \"" + n + "\"");
    out.push_back(std::move(n));
  }
  return out;
}

template <class Lookup>
std::size_t index_at(const json& v, const std::string& path, const Lookup& lookup, std::string_view what) {
  const auto n = name_at(v, path);
  const auto i = lookup(n);
  if (!i) throw ParseError(path, "unknown " + std::string(what) + " \"" + n + "\"");
  return *i;
}

std::pair<std::size_t, std::size_t> pair_at(const json& v, const std::string& path, const auto& lookup,
                                            std::string_view what) {
  if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected a pair [x, y]");
  return {index_at(v[0], child(path, 0), lookup, what), index_at(v[1], child(path, 1), lookup, what)};
}

AtomSet atom_set_at(const cwb::Algebra& alg, const json& v, const std::string& path) {
  AtomSet s = 0;
  const json& arr = array_at(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    s |= cwb::bit<AtomSet>(
        index_at(arr[i], child(path, i), [&](const std::string& n) { return alg.index_of(n); }, "atom"));
  return s;
}

cwb::Algebra algebra_at(const json& doc, const std::string& key) {
  auto names = names_at(field(doc, "", key), "/" + key);
  if (names.size() > cwb::kMaxAtoms)
    throw ParseError("/" + key, "at most " + std::to_string(cwb::kMaxAtoms) + " atoms supported");
  return cwb::Algebra(std::move(names));
}

void parse_algebra(const json& doc, Document& out) {
  out.algebra = algebra_at(doc, "atoms");
  const cwb::Algebra& alg = out.algebra;
  auto lookup = [&](const std::string& n) { return alg.index_of(n); };
  const bool has_contact = doc.contains("contact");
  const bool has_table = doc.contains("table");
  if (has_contact && has_table) throw ParseError("/table", "give either \"contact\" or \"table\", not both");
  if (has_contact) {
    const json& c = doc["contact"];
    if (c.is_string()) {
      const auto s = c.get<std::string>();
      if (s == "rho_s")
        out.rel = cwb::rho_s(alg);
      else if (s == "rho_l")
        out.rel = cwb::rho_l(alg);
      else
        throw ParseError("/contact", "unknown relation shorthand \"" + s + "\" (rho_s, rho_l)");
      return;
    }
    cwb::BinaryRelation core(alg.size());
    const json& arr = array_at(c, "/contact");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto [x, y] = pair_at(arr[i], child("/contact", i), lookup, "atom");
      core.insert(x, y);
    }
    out.rel = cwb::PrecontactRel(alg, std::move(core));
  } else if (has_table) {
    if (alg.size() > cwb::RelationTable::kMaxAtoms)
      throw ParseError("/table", "tables support at most " + std::to_string(cwb::RelationTable::kMaxAtoms) + " atoms");
    cwb::RelationTable table(alg);
    const json& arr = array_at(doc["table"], "/table");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = child("/table", i);
      if (!arr[i].is_array() || arr[i].size() != 2) throw ParseError(p, "expected an element pair [a, b]");
      table.set(atom_set_at(alg, arr[i][0], child(p, 0)), atom_set_at(alg, arr[i][1], child(p, 1)));
    }
    if (cwb::is_precontact(table)) out.rel = cwb::from_table(table);
    out.table = std::move(table);
  }
}

void parse_adjacency(const json& doc, Document& out) {
  std::vector<std::string> cells;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_array() || g.size() != 2 || !g[0].is_number_unsigned() || !g[1].is_number_unsigned())
      throw ParseError("/grid", "expected [rows, cols]");
    const std::size_t rows = g[0].get<std::size_t>(), cols = g[1].get<std::size_t>();
    if (rows * cols > cwb::kMaxAtoms)
      throw ParseError("/grid", "at most " + std::to_string(cwb::kMaxAtoms) + " cells supported");
    std::string hood = "von-neumann";
    if (doc.contains("neighborhood")) {
      if (!doc["neighborhood"].is_string()) throw ParseError("/neighborhood", "expected a string");
      hood = doc["neighborhood"].get<std::string>();
    }
    if (hood != "von-neumann" && hood != "moore")
      throw ParseError("/neighborhood", "unknown neighborhood \"" + hood + "\" (von-neumann, moore)");
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) cells.push_back("r" + std::to_string(i) + "c" + std::to_string(j));
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = 0; b < cells.size(); ++b) {
        const long dr = static_cast<long>(a / cols) - static_cast<long>(b / cols);
        const long dc = static_cast<long>(a % cols) - static_cast<long>(b % cols);
        const long d1 = std::abs(dr) + std::abs(dc), dinf = std::max(std::abs(dr), std::abs(dc));
        if (hood == "moore" ? dinf <= 1 : d1 <= 1) pairs.emplace_back(a, b);
      }
  } else {
    cells = names_at(field(doc, "", "cells"), "/cells");
    if (cells.size() > cwb::kMaxAtoms)
      throw ParseError("/cells", "at most " + std::to_string(cwb::kMaxAtoms) + " cells supported");
    auto lookup = [&](const std::string& n) -> std::optional<std::size_t> {
      auto it = std::find(cells.begin(), cells.end(), n);
      if (it == cells.end()) return std::nullopt;
      return static_cast<std::size_t>(it - cells.begin());
    };
    const json& arr = array_at(field(doc, "", "adjacency"), "/adjacency");
    for (std::size_t i = 0; i < arr.size(); ++i) pairs.push_back(pair_at(arr[i], child("/adjacency", i), lookup, "cell"));
  }
  out.algebra = cwb::Algebra(std::move(cells));
  out.rel = cwb::PrecontactRel(out.algebra, cwb::BinaryRelation::from_pairs(out.algebra.size(), pairs));
}

void parse_space_pair(const json& doc, Document& out) {
  auto points = names_at(field(doc, "", "points"), "/points");
  if (points.size() > cwb::kMaxPoints)
    throw ParseError("/points", "at most " + std::to_string(cwb::kMaxPoints) + " points supported");
  auto lookup = [&](const std::string& n) -> std::optional<std::size_t> {
    auto it = std::find(points.begin(), points.end(), n);
    if (it == points.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points.begin());
  };
  auto point_set_at = [&](const json& v, const std::string& path) {
    PointSet s = 0;
    const json& arr = array_at(v, path);
    for (std::size_t i = 0; i < arr.size(); ++i) s |= cwb::bit<PointSet>(index_at(arr[i], child(path, i), lookup, "point"));
    return s;
  };
  std::vector<PointSet> base;
  const json& arr = array_at(field(doc, "", "closed_base"), "/closed_base");
  for (std::size_t i = 0; i < arr.size(); ++i) base.push_back(point_set_at(arr[i], child("/closed_base", i)));
  const std::size_t n = points.size();
  const PointSet x0 = doc.contains("x0") ? point_set_at(doc["x0"], "/x0") : cwb::full_mask<PointSet>(n);
  out.pair = cwb::TopPair{cwb::FiniteSpace::generate(points, base), x0};
  if (doc.contains("r")) {
    cwb::BinaryRelation r(n);
    const json& rs = array_at(doc["r"], "/r");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto [x, y] = pair_at(rs[i], child("/r", i), lookup, "point");
      if (!cwb::has(x0, x) || !cwb::has(x0, y)) throw ParseError(child("/r", i), "r relates points outside x0");
      r.insert(x, y);
    }
    out.r = std::move(r);
  }
}

std::vector<std::size_t> ordered(PointSet s) { return cwb::indices_of(s); }

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return c > ' ' && c < 127 && c != '"' && c != '\\'; });
}

Document parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto at = what.find("parse error"); at != std::string::npos) what = what.substr(at);
    throw ParseError("byte " + std::to_string(e.byte), what);
  }
  return parse_document_json(doc);
}

Document parse_document_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  const json& k = field(doc, "", "kind");
  if (!k.is_string()) throw ParseError("/kind", "expected a string");
  const auto kind = k.get<std::string>();
  Document out;
  if (kind == "algebra") {
    out.kind = DocKind::algebra;
    parse_algebra(doc, out);
  } else if (kind == "adjacency") {
    out.kind = DocKind::adjacency;
    parse_adjacency(doc, out);
  } else if (kind == "space-pair") {
    out.kind = DocKind::space_pair;
    parse_space_pair(doc, out);
  } else {
    throw ParseError("/kind", "unknown kind \"" + kind + "\" (algebra, adjacency, space-pair)");
  }
  return out;
}

json atom_set_json(const cwb::Algebra& algebra, AtomSet atoms) {
  json out = json::array();
  cwb::for_each_bit(atoms, [&](std::size_t i) { out.push_back(algebra.atom(i)); });
  return out;
}

json algebra_json(const cwb::Algebra& algebra) {
  return json{{"kind", "algebra"}, {"atoms", algebra.atoms()}};
}

json algebra_json(const cwb::PrecontactRel& rel) {
  json out = algebra_json(rel.algebra());
  json pairs = json::array();
  for (const auto& [x, y] : rel.core().pairs()) pairs.push_back({rel.algebra().atom(x), rel.algebra().atom(y)});
  out["contact"] = std::move(pairs);
  return out;
}

json space_pair_json(const cwb::TopPair& pair, const cwb::BinaryRelation* r, const std::vector<PointSet>* closed_base) {
  const cwb::FiniteSpace& x = pair.space;
  auto names = [&](PointSet s) {
    json out = json::array();
    for (std::size_t i : ordered(s)) out.push_back(x.name(i));
    return out;
  };
  std::vector<PointSet> base;
  if (closed_base) {
    for (PointSet s : *closed_base)
      if (s != 0) base.push_back(s);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) base.push_back(x.point_closure(i));
  }
  std::sort(base.begin(), base.end(), cwb::shortlex_less<PointSet>);
  base.erase(std::unique(base.begin(), base.end()), base.end());
  json base_json = json::array();
  for (PointSet s : base) base_json.push_back(names(s));
  json out{{"kind", "space-pair"}, {"points", x.names()}, {"closed_base", base_json}, {"x0", names(pair.x0)}};
  if (r) {
    json pairs = json::array();
    for (const auto& [a, b] : r->pairs()) pairs.push_back({x.name(a), x.name(b)});
    out["r"] = std::move(pairs);
  }
  return out;
}

json report_json(const cwb::Report& report) {
  json checks = json::array();
  for (const cwb::Check& c : report.checks()) {
    json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) entry["witness"] = c.witness;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  return json{{"title", report.title()}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

cwb::Report report_from_json(const json& doc) {
  cwb::Report report(field(doc, "", "title").get<std::string>());
  for (const json& c : field(doc, "", "checks")) {
    cwb::Check check{c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.value("witness", ""),
                     c.value("note", "")};
    report.add(std::move(check));
  }
  return report;
}

}  // namespace workbench
