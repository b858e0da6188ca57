#include "run.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cwb/duality.hpp"
#include "cwb/points.hpp"
#include "document.hpp"
#include "dot.hpp"

namespace workbench {

namespace {

using cwb::AtomSet;
using cwb::PointSet;

/// A verdict the user asked for failed; the message carries the witness.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string axioms;
  std::string kind;
  std::string dot;
  std::string suite = "all";
  std::size_t atoms = 0;
  bool timings = false;
};

Document load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw cwb::InputError("cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw cwb::InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

bool is_space(const Document& doc) { return doc.kind == DocKind::space_pair; }

/// The document's precontact relation; a table violating C0/C+ is a check
/// failure carrying the axiom witness.
const cwb::PrecontactRel& relation(const Document& doc) {
  if (doc.rel) return *doc.rel;
  if (doc.table) {
    const cwb::Report r = cwb::check_axioms(*doc.table);
    const cwb::Check* bad = r.first_failure();
    throw CheckFailed("relation is not a precontact relation: " + bad->name + " fails at " + bad->witness);
  }
  if (is_space(doc)) throw cwb::InputError("expected an algebra or adjacency document");
  throw cwb::InputError("document has no relation (add \"contact\" or \"table\")");
}

void print(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int verdict(bool passed) { return passed ? kExitPass : kExitCheckFailed; }

json reports_json(const std::vector<cwb::Report>& reports) {
  json list = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    passed = passed && r.passed();
  }
  return json{{"kind", "report"}, {"passed", passed}, {"reports", std::move(list)}};
}

// ---------------------------------------------------------------------------
// check

const std::vector<std::string> kAllAxioms = {"C0", "C+", "Cref", "Csym", "Ctr", "Ccon", "Ctr#", "C6"};

std::vector<std::string> axiom_selection(const std::string& spec) {
  if (spec.empty() || spec == "precontact") return {"C0", "C+"};
  if (spec == "contact") return {"C0", "C+", "Cref", "Csym"};
  if (spec == "all") return kAllAxioms;
  std::vector<std::string> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (std::find(kAllAxioms.begin(), kAllAxioms.end(), item) == kAllAxioms.end())
      throw cwb::InputError("unknown axiom \"" + item + "\"");
    out.push_back(item);
  }
  return out;
}

int cmd_check(const Options& opt, std::istream& in, std::ostream& out) {
  const Document doc = load(opt.input, in);
  cwb::Report report;
  if (is_space(doc)) {
    std::string axioms = opt.axioms.empty() ? (doc.r ? "pcs" : "cs") : opt.axioms;
    if (axioms == "pcs") {
      if (!doc.r) throw cwb::InputError("pcs axioms need a relation \"r\"");
      report = cwb::check_pcs({*doc.pair, *doc.r});
    } else if (axioms == "cs") {
      report = cwb::check_cs(*doc.pair);
    } else if (axioms == "s2s") {
      report = cwb::check_s2s(*doc.pair);
    } else {
      throw cwb::InputError("unknown axiom set \"" + axioms + "\" for a space-pair (pcs, cs, s2s)");
    }
  } else {
    if (!doc.rel && !doc.table) relation(doc);
    const cwb::Report full = doc.rel ? cwb::check_axioms(*doc.rel) : cwb::check_axioms(*doc.table);
    report = cwb::Report("axioms");
    for (const auto& name : axiom_selection(opt.axioms)) report.add(*full.find(name));
    if (opt.axioms == "all") report.merge(cwb::ll_axiom_equivalence(doc.rel ? doc.rel->table() : *doc.table), "<<");
  }
  print(out, reports_json({report}));
  return verdict(report.passed());
}

// ---------------------------------------------------------------------------
// dualize

int cmd_dualize(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Document doc = load(opt.input, in);
  if (is_space(doc)) {
    const std::string kind = opt.kind.empty() ? (doc.r ? "2pcs" : "2cs") : opt.kind;
    std::optional<cwb::CanonicalAlgebra> ca;
    if (kind == "2pcs") {
      if (!doc.r) throw cwb::InputError("--kind 2pcs needs a relation \"r\"");
      const cwb::TwoPCS pcs{*doc.pair, *doc.r};
      if (const cwb::Check* bad = cwb::check_pcs(pcs).first_failure())
        throw CheckFailed("not a 2-precontact space: " + bad->name + " " + bad->witness);
      ca = cwb::canonical_algebra_of_2pcs(pcs);
    } else if (kind == "2cs" || kind == "stone2") {
      const cwb::Report r = kind == "2cs" ? cwb::check_cs(*doc.pair) : cwb::check_s2s(*doc.pair);
      if (const cwb::Check* bad = r.first_failure())
        throw CheckFailed(std::string(kind == "2cs" ? "not a 2-contact space: " : "not a Stone 2-space: ") +
                          bad->name + " " + bad->witness);
      ca = cwb::canonical_algebra_of_2cs(*doc.pair);
    } else {
      throw cwb::InputError("unknown --kind \"" + kind + "\" (2pcs, 2cs, stone2)");
    }
    print(out, algebra_json(ca->rel));
    return kExitPass;
  }

  const std::string kind = opt.kind.empty() ? (doc.rel || doc.table ? "2pcs" : "stone2") : opt.kind;
  std::optional<cwb::CanonicalSpace> cs;
  if (kind == "2pcs") {
    cs = cwb::canonical_2pcs(relation(doc));
  } else if (kind == "2cs") {
    const auto& rel = relation(doc);
    if (!cwb::is_contact(rel)) {
      const cwb::Check* bad = cwb::check_axioms(rel).first_failure();
      throw CheckFailed("not a contact relation: " + bad->name + " fails at " + bad->witness);
    }
    cs = cwb::canonical_2cs(rel);
  } else if (kind == "stone2") {
    if (doc.rel && !(*doc.rel == cwb::rho_l(doc.algebra)))
      err << "note: the canonical Stone 2-space uses rho_l; the document's relation is ignored\n";
    cs = cwb::canonical_stone2(doc.algebra);
  } else {
    throw cwb::InputError("unknown --kind \"" + kind + "\" (2pcs, 2cs, stone2)");
  }
  std::vector<PointSet> base;
  for (AtomSet a = 0; a < doc.algebra.element_count(); ++a) base.push_back(cs->g(a));
  print(out, space_pair_json(cs->pair(), kind == "2pcs" ? &cs->pcs.r : nullptr, &base));
  if (!opt.dot.empty()) {
    std::ofstream file(opt.dot, std::ios::binary);
    if (!file) throw cwb::InputError("cannot write " + opt.dot);
    file << specialization_dot(cs->space());
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// points

int cmd_points(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Document doc = load(opt.input, in);
  if (is_space(doc)) throw cwb::InputError("points expects an algebra or adjacency document");
  const std::string kind = opt.kind.empty() ? "clans" : opt.kind;
  std::vector<cwb::AbstractPoint> points;
  if (kind == "ultrafilters")
    points = cwb::ultrafilter_points(doc.algebra);
  else if (kind == "grills")
    points = cwb::grills(doc.algebra);
  else if (kind == "clans")
    points = cwb::clans(relation(doc));
  else
    throw cwb::InputError("unknown --kind \"" + kind + "\" (ultrafilters, grills, clans)");
  if (doc.algebra.size() == 0)
    err << "warning: the algebra has no atoms (0 = 1) and no " << kind << "; it is not representable\n";
  json list = json::array();
  for (const auto& p : points) list.push_back(atom_set_json(doc.algebra, p.atoms));
  print(out, json{{"kind", "points"}, {"point_kind", kind}, {"count", points.size()}, {"points", std::move(list)}});
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

cwb::Report representation_suite(const Document& doc) {
  if (!is_space(doc)) return cwb::verify_theorem(relation(doc));
  cwb::Report report("representation of a space pair");
  const cwb::BinaryRelation r = doc.r ? *doc.r : cwb::derived_relation_of_2cs(*doc.pair);
  if (!doc.r) {
    report.merge(cwb::check_cs(*doc.pair), "2-contact space");
    if (!report.passed()) return report;
  }
  const cwb::TwoPCS pcs{*doc.pair, r};
  report.merge(cwb::check_pcs(pcs), "2-precontact space");
  if (report.passed()) report.merge(cwb::space_round_trip(pcs), "round trip");
  return report;
}

std::vector<cwb::Report> duality_suite(const Document& doc) {
  const std::size_t n = doc.algebra.size();
  if (n > 3) throw cwb::CapError("the duality suite is exhaustive up to 3 atoms; the document has " + std::to_string(n));
  cwb::DualityOptions options;
  options.max_atoms = n;
  return {cwb::verify_duality(options), cwb::ecc_check(doc.algebra)};
}

cwb::Report extensions_suite(const Document& doc) {
  const auto poset = cwb::extension_poset(cwb::FiniteSpace::discrete(doc.algebra.atoms()));
  return poset.report;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Document doc = load(opt.input, in);
  const std::string& suite = opt.suite;
  if (suite != "representation" && suite != "duality" && suite != "extensions" && suite != "all")
    throw cwb::InputError("unknown --suite \"" + suite + "\" (representation, duality, extensions, all)");
  const bool all = suite == "all";
  if (is_space(doc) && (suite == "duality" || suite == "extensions"))
    throw cwb::InputError("the " + suite + " suite expects an algebra or adjacency document");

  std::vector<cwb::Report> reports;
  std::vector<double> elapsed;
  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    elapsed.resize(reports.size(), std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  };
  try {
    if (suite == "representation" || all) {
      if (all && !is_space(doc) && !doc.rel && !doc.table)
        err << "note: no relation in the document; representation suite skipped\n";
      else
        timed([&] { reports.push_back(representation_suite(doc)); });
    }
    if (!is_space(doc)) {
      if (suite == "duality" || all)
        timed([&] {
          for (auto& r : duality_suite(doc)) reports.push_back(std::move(r));
        });
      if (suite == "extensions" || all) timed([&] { reports.push_back(extensions_suite(doc)); });
    }
  } catch (const CheckFailed& e) {
    cwb::Report failed("relation");
    const cwb::Report axioms = cwb::check_axioms(*doc.table);
    failed.add(*axioms.find("C0"));
    failed.add(*axioms.find("C+"));
    reports.insert(reports.begin(), failed);
    err << "error: " << e.what() << '\n';
  }
  json doc_out = reports_json(reports);
  if (opt.timings)
    for (std::size_t i = 0; i < elapsed.size() && i < doc_out["reports"].size(); ++i)
      doc_out["reports"][i]["elapsed_ms"] = elapsed[i];
  print(out, doc_out);
  return verdict(doc_out["passed"].get<bool>());
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const cwb::Algebra alg = cwb::Algebra::with_default_names(opt.atoms);
  const std::string kind = opt.kind.empty() ? "contact" : opt.kind;
  auto emit = [&](const cwb::PrecontactRel& rel) { out << algebra_json(rel).dump() << '\n'; };
  if (kind == "contact")
    cwb::enumerate_contact_relations(alg, emit);
  else if (kind == "precontact")
    cwb::enumerate_precontact_relations(alg, emit);
  else
    throw cwb::InputError("unknown --kind \"" + kind + "\" (contact, precontact)");
  return kExitPass;
}

// ---------------------------------------------------------------------------
// export

std::string contact_label(const cwb::PrecontactRel& rel) {
  std::string s;
  for (auto [p, q] : rel.core().pairs())
    if (p < q) s += (s.empty() ? "" : ",") + rel.algebra().atom(p) + "~" + rel.algebra().atom(q);
  return "{" + s + "}";
}

int cmd_export(const Options& opt, std::istream& in, std::ostream& out) {
  const Document doc = load(opt.input, in);
  const std::string what = opt.dot.empty() ? "specialization" : opt.dot;
  if (what == "specialization") {
    if (is_space(doc))
      out << specialization_dot(doc.pair->space);
    else if (doc.rel || doc.table)
      out << specialization_dot(cwb::canonical_2pcs(relation(doc)).space());
    else
      out << specialization_dot(cwb::canonical_stone2(doc.algebra).space());
  } else if (what == "adjacency") {
    if (is_space(doc)) {
      if (!doc.r) throw cwb::InputError("the space pair has no relation \"r\"");
      out << relation_dot("adjacency", doc.pair->space.names(), *doc.r);
    } else {
      const auto adj = cwb::canonical_adjacency(relation(doc));
      out << relation_dot("adjacency", doc.algebra.atoms(), adj.relation);
    }
  } else if (what == "poset") {
    if (is_space(doc)) throw cwb::InputError("poset export expects an algebra or adjacency document");
    const auto poset = cwb::extension_poset(cwb::FiniteSpace::discrete(doc.algebra.atoms()));
    std::vector<std::string> names;
    for (const auto& e : poset.records) names.push_back(contact_label(e.contact));
    out << order_dot("extensions", names, poset.leq_in);
  } else {
    throw cwb::InputError("unknown --dot \"" + what + "\" (specialization, adjacency, poset)");
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite contact algebra and topology workbench", "workbench"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Check axioms of a relation or space pair");
  check->add_option("input", opt.input, "Input document, - for stdin")->required();
  check->add_option("--axioms", opt.axioms, "precontact, contact, all, a comma list of axioms, or pcs/cs/s2s");

  auto* dualize = app.add_subcommand("dualize", "Canonical space of an algebra, or canonical algebra of a space");
  dualize->add_option("input", opt.input, "Input document, - for stdin")->required();
  dualize->add_option("--kind", opt.kind, "2pcs, 2cs or stone2");
  dualize->add_option("--dot", opt.dot, "Also write the specialization order as DOT to this file");

  auto* points = app.add_subcommand("points", "List abstract points of an algebra");
  points->add_option("input", opt.input, "Input document, - for stdin")->required();
  points->add_option("--kind", opt.kind, "ultrafilters, grills or clans");

  auto* verify = app.add_subcommand("verify", "Run theorem verification suites");
  verify->add_option("input", opt.input, "Input document, - for stdin")->required();
  verify->add_option("--suite", opt.suite, "representation, duality, extensions or all");
  verify->add_flag("--timings", opt.timings, "Add elapsed_ms to each report");

  auto* enumerate = app.add_subcommand("enumerate", "Stream all relations on n atoms as JSON lines");
  enumerate->add_option("--atoms", opt.atoms, "Number of atoms")->required();
  enumerate->add_option("--kind", opt.kind, "contact or precontact");

  auto* exporter = app.add_subcommand("export", "Write a DOT graph");
  exporter->add_option("input", opt.input, "Input document, - for stdin")->required();
  exporter->add_option("--dot", opt.dot, "specialization, adjacency or poset");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "workbench: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(opt, in, out);
    if (dualize->parsed()) return cmd_dualize(opt, in, out, err);
    if (points->parsed()) return cmd_points(opt, in, out, err);
    if (verify->parsed()) return cmd_verify(opt, in, out, err);
    if (enumerate->parsed()) return cmd_enumerate(opt, out);
    return cmd_export(opt, in, out);
  } catch (const CheckFailed& e) {
    err << "workbench: check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const cwb::Error& e) {
    err << "workbench: error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "workbench: error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace workbench
