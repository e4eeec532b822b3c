#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringforge/simples.hpp"

namespace ringforge {

// Socle of the projective eR: { x in eR : x J = 0 }, the largest semisimple
// submodule (for finite modules soc(M) = { x : xJ = 0 }).
Subgroup right_socle_of_projective(const SimplesData& data, const Elem& e);

// Class multiplicities of a right module with trivial J-action: multiplicity
// of S_j = log_{s_j} |s * f_j|. Returns one entry per class.
std::vector<Int> socle_isotype(const SimplesData& data, const Subgroup& s);

enum class QfFailure { socle_not_simple, socle_map_not_injective, left_right_mismatch };

/**
 * Nakayama permutation data. is_qf iff every projective cover has a simple
 * socle, the induced class map is a bijection, and the left-side condition
 * Soc(P(_pi(i) S)) = _i S holds on the opposite ring. The left permutation is
 * recorded and must be the inverse of pi.
 */
struct NakayamaData {
    bool is_qf = false;
    std::vector<int> permutation;       // pi, right socles; valid iff is_qf
    std::vector<int> left_permutation;  // valid iff is_qf
    std::optional<QfFailure> failure;
    std::string failure_detail;
};

std::string to_string(QfFailure f);

NakayamaData nakayama(const SimplesData& data, const SimplesData& op_data);
NakayamaData nakayama(const FiniteRing& r, const Caps& caps = {});

// q_i = q_{pi(i)} for every class; throws NotQF when the ring is not QF.
bool verify_propqf(const SimplesData& data, const NakayamaData& nak);

}  // namespace ringforge
