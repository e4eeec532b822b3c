#pragma once

#include <cstdint>

namespace ringforge {

std::int64_t default_element_cap();  // 2^20 unless RINGFORGE_CAP_ELEMENTS overrides it

// Size guards for the exhaustive parts of the pipeline. Everything in the
// default corpus fits comfortably; the caps exist so that a stray huge input
// fails loudly instead of grinding.
struct Caps {
    std::int64_t elements = default_element_cap();  // element enumeration
    std::int64_t structure_scan = 1 << 16;          // radical / idempotent scans
    std::int64_t oracle_ring = 256;                 // |R| for the ext oracle
    std::int64_t oracle_module = 4096;              // brute radical / socle
    std::int64_t oracle_pair = 64;                  // s_i * s_j for the ext oracle
    std::int64_t oracle_budget = 1 << 22;           // ext oracle candidate structures
};

}  // namespace ringforge
