#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cwb/boolean_core.hpp"
#include "cwb/dual_construction.hpp"
#include "cwb/error.hpp"
#include "cwb/precontact.hpp"
#include "cwb/report.hpp"

namespace workbench {

using json = nlohmann::json;

enum class DocKind { algebra, adjacency, space_pair };

/// One parsed input document. An algebra may come without a relation, with
/// a core ("contact"), or with an element table that need not be valid.
struct Document {
  DocKind kind = DocKind::algebra;
  cwb::Algebra algebra;
  std::optional<cwb::PrecontactRel> rel;
  std::optional<cwb::RelationTable> table;
  std::optional<cwb::TopPair> pair;
  std::optional<cwb::BinaryRelation> r;
};

/// Malformed document; `where` is a JSON pointer, or a line/column locus
/// for syntax errors.
class ParseError : public cwb::InputError {
 public:
  ParseError(const std::string& where, const std::string& what)
      : cwb::InputError(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Document parse_document(std::string_view text);
Document parse_document_json(const json& doc);

/// Names must be nonempty printable ASCII without whitespace or quotes.
bool is_valid_name(std::string_view name);

json atom_set_json(const cwb::Algebra& algebra, cwb::AtomSet atoms);
json algebra_json(const cwb::PrecontactRel& rel);
json algebra_json(const cwb::Algebra& algebra);
/// Closed base defaults to the point closures.
json space_pair_json(const cwb::TopPair& pair, const cwb::BinaryRelation* r,
                     const std::vector<cwb::PointSet>* closed_base = nullptr);

json report_json(const cwb::Report& report);
cwb::Report report_from_json(const json& doc);

}  // namespace workbench
