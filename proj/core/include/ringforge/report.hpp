#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringforge/blocks.hpp"
#include "ringforge/qf.hpp"

namespace ringforge {

/**
 * Full analysis of one ring: structural invariants, both Ext quivers, the
 * composition tables, Nakayama data, and the theorem verdicts. Serializes to
 * deterministic JSON (timings excluded when with_timing is false).
 */
struct AnalysisReport {
    std::string name;
    Int size = 0;
    std::vector<Int> orders;

    std::vector<Int> filtration_sizes;  // |J^0| .. |J^n| = 1
    int nilpotency_index = 0;

    struct ClassRow {
        Int simple_size, multiplicity, endo_order, characteristic;
        int block;  // 0-based block index
    };
    std::vector<ClassRow> classes;

    std::vector<Int> block_sizes;
    Partition block_partition;

    std::vector<std::vector<Int>> right_quiver;
    std::vector<std::vector<Int>> left_quiver;
    std::vector<std::vector<std::vector<Int>>> composition;  // [class][layer][class]

    bool is_qf = false;
    std::vector<int> permutation;       // right Nakayama permutation, iff is_qf
    std::vector<int> left_permutation;  // iff is_qf
    std::string qf_failure;             // empty iff is_qf
    std::optional<bool> endo_match;     // q_i = q_{pi(i)}; present iff is_qf

    TheoremReport theorems;

    bool with_timing = false;
    std::vector<std::pair<std::string, double>> timings_ms;
};

AnalysisReport analyze_ring(const FiniteRing& r, const Caps& caps = {}, bool with_timing = false);

bool all_checks_pass(const TheoremReport& report);
bool report_all_pass(const AnalysisReport& report);

std::string report_to_json(const AnalysisReport& report);

// Inverse of report_to_json; round-trips losslessly.
AnalysisReport report_from_json(const std::string& text);

/**
 * One verification item from the `check` pipeline: a theorem verdict or an
 * oracle/main-path equivalence. Skipped items record the cap that stopped
 * them.
 */
struct CheckItem {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string witness;
};

struct CheckResult {
    std::string ring_name;
    std::vector<CheckItem> items;
    bool all_pass = true;
};

// Runs the theorem verifiers plus all oracle equivalences (radical, central
// idempotents, socles, ext for every ordered class pair) on one ring.
CheckResult check_ring(const FiniteRing& r, const Caps& caps = {});

std::string check_result_to_json(const std::vector<CheckResult>& results,
                                 const std::vector<std::string>& ring_specs);

}  // namespace ringforge
