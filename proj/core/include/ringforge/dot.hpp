#pragma once

#include <string>

#include "ringforge/report.hpp"

namespace ringforge {

// DOT digraph of the right Ext quiver: one node per class labeled
// "S{j} |S|={s} q={q} p={p} mu={mu}", one edge per arrow labeled with its
// multiplicity, blocks rendered as subgraph clusters. Node and edge order is
// fixed by class id, then target id.
std::string quiver_dot(const AnalysisReport& report);

}  // namespace ringforge
