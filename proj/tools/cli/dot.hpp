#pragma once

#include <string>
#include <vector>

#include "cwb/finite_space.hpp"
#include "cwb/precontact.hpp"

namespace workbench {

/// Hasse diagram of the specialization order: an edge y -> x when x lies
/// in cl{y} and nothing lies strictly between. Equivalent points of a
/// non-T0 space get edges both ways.
std::string specialization_dot(const cwb::FiniteSpace& space);

/// Every pair of the relation, loops included.
std::string relation_dot(const std::string& graph_name, const std::vector<std::string>& names,
                         const cwb::BinaryRelation& relation);

/// Hasse diagram of a partial order given by leq[i][j], smaller -> larger.
std::string order_dot(const std::string& graph_name, const std::vector<std::string>& names,
                      const std::vector<std::vector<bool>>& leq);

}  // namespace workbench
