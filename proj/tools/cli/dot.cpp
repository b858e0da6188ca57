#include "dot.hpp"

#include <sstream>

namespace workbench {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string graph(const std::string& graph_name, const std::vector<std::string>& names,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  for (const auto& n : names) out << "  " << quoted(n) << ";\n";
  for (const auto& [a, b] : edges) out << "  " << quoted(names[a]) << " -> " << quoted(names[b]) << ";\n";
  out << "}\n";
  return out.str();
}

/// Cover edges of a preorder; equivalent pairs are linked both ways.
std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t n, const auto& leq) {
  auto strict = [&](std::size_t a, std::size_t b) { return leq(a, b) && !leq(b, a); };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      if (strict(a, b))
        for (std::size_t z = 0; z < n && cover; ++z) cover = !(strict(a, z) && strict(z, b));
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

}  // namespace

std::string specialization_dot(const cwb::FiniteSpace& space) {
  // y -> x when x is in cl{y}
  auto leq = [&](std::size_t y, std::size_t x) { return space.below(x, y); };
  return graph("specialization", space.names(), covers(space.size(), leq));
}

std::string relation_dot(const std::string& graph_name, const std::vector<std::string>& names,
                         const cwb::BinaryRelation& relation) {
  return graph(graph_name, names, relation.pairs());
}

std::string order_dot(const std::string& graph_name, const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq) {
  return graph(graph_name, names, covers(names.size(), [&](std::size_t a, std::size_t b) { return leq[a][b]; }));
}

}  // namespace workbench
