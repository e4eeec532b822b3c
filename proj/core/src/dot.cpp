#include "ringforge/dot.hpp"

#include <sstream>

namespace ringforge {

std::string quiver_dot(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "digraph ext_quiver {\n";
    out << "  rankdir=LR;\n";
    out << "  label=\"" << rep.name << "\";\n";
    for (size_t b = 0; b < rep.block_partition.size(); ++b) {
        out << "  subgraph cluster_block_" << b + 1 << " {\n";
        out << "    label=\"block " << b + 1 << "\";\n";
        for (int cls : rep.block_partition[b]) {
            const auto& c = rep.classes[cls];
            out << "    s" << cls + 1 << " [label=\"S" << cls + 1 << " |S|=" << c.simple_size
                << " q=" << c.endo_order << " p=" << c.characteristic
                << " mu=" << c.multiplicity << "\"];\n";
        }
        out << "  }\n";
    }
    for (size_t i = 0; i < rep.right_quiver.size(); ++i)
        for (size_t j = 0; j < rep.right_quiver[i].size(); ++j)
            if (rep.right_quiver[i][j] > 0)
                out << "  s" << i + 1 << " -> s" << j + 1 << " [label=\""
                    << rep.right_quiver[i][j] << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ringforge
