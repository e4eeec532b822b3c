#include "ringforge/qf.hpp"

#include <algorithm>

#include "ringforge/errors.hpp"

namespace ringforge {

std::string to_string(QfFailure f) {
    switch (f) {
        case QfFailure::socle_not_simple: return "socle not simple";
        case QfFailure::socle_map_not_injective: return "socle map not injective";
        case QfFailure::left_right_mismatch: return "left-right mismatch";
    }
    return "?";
}

Subgroup right_socle_of_projective(const SimplesData& data, const Elem& e) {
    const FiniteRing& r = data.ring;
    const int k = r.dim();
    Subgroup cover = projective_cover(r, e);
    std::vector<Elem> jgens = data.radical().generators();
    if (jgens.empty()) return cover;  // semisimple: soc(eR) = eR

    // Kernel of x -> (x g) over all radical generators, intersected with eR.
    const int m = static_cast<int>(jgens.size());
    const int n = m * k;
    linalg::Mat images(k, linalg::Row(n, 0));
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < m; ++t) {
            Elem prod = r.mul(r.basis(i), jgens[t]);
            for (int c = 0; c < k; ++c) images[i][t * k + c] = prod[c];
        }
    linalg::Mat target(n, linalg::Row(n, 0));
    for (int t = 0; t < m; ++t)
        for (int c = 0; c < k; ++c) target[t * k + c][t * k + c] = r.orders()[c];
    Subgroup killed = additive_kernel(r, images, target, n);
    return intersect(killed, cover);
}

std::vector<Int> socle_isotype(const SimplesData& data, const Subgroup& s) {
    const FiniteRing& r = data.ring;
    // Precondition: s J = 0; generators against generators suffices.
    for (const Elem& x : s.generators())
        for (const Elem& g : data.radical().generators())
            if (!r.is_zero(r.mul(x, g)))
                throw InvariantViolation("socle_isotype: module is not annihilated by J");

    std::vector<Int> mults;
    for (const auto& cls : data.classes) {
        std::vector<Elem> gens;
        for (const Elem& x : s.generators()) gens.push_back(r.mul(x, cls.f_lift));
        Int sz = Subgroup::span(r, gens).size();
        Int m = 0, acc = 1;
        while (acc < sz) {
            acc = linalg::checked_mul(acc, cls.simple_size);
            ++m;
        }
        if (acc != sz)
            throw InvariantViolation("socle isotype size is not a power of the simple size");
        mults.push_back(m);
    }
    return mults;
}

NakayamaData nakayama(const SimplesData& data, const SimplesData& op_data) {
    const int n = static_cast<int>(data.classes.size());
    NakayamaData out;

    // Right socles must be simple and induce a bijection.
    std::vector<int> pi(n, -1);
    for (int i = 0; i < n; ++i) {
        Subgroup soc = right_socle_of_projective(data, data.classes[i].e);
        auto iso = socle_isotype(data, soc);
        int hit = -1;
        bool simple = true;
        for (int j = 0; j < n; ++j) {
            if (iso[j] == 0) continue;
            if (iso[j] > 1 || hit >= 0) simple = false;
            hit = j;
        }
        if (!simple || hit < 0) {
            out.failure = QfFailure::socle_not_simple;
            out.failure_detail = "soc(P(S" + std::to_string(i + 1) + ")) is not simple";
            return out;
        }
        pi[i] = hit;
    }
    {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[pi[i]]) {
                out.failure = QfFailure::socle_map_not_injective;
                out.failure_detail = "classes map to S" + std::to_string(pi[i] + 1) + " twice";
                return out;
            }
            seen[pi[i]] = true;
        }
    }

    // Left condition on the opposite ring: soc(P(_pi(i) S)) = _i S.
    std::vector<int> to_ours = match_classes_via_blocks(data, op_data);
    std::vector<int> from_ours(n, -1);
    for (int a = 0; a < n; ++a) from_ours[to_ours[a]] = a;

    std::vector<int> left_pi(n, -1);
    for (int a = 0; a < n; ++a) {
        Subgroup soc = right_socle_of_projective(op_data, op_data.classes[a].e);
        auto iso = socle_isotype(op_data, soc);
        int hit = -1;
        bool simple = true;
        for (int b = 0; b < n; ++b) {
            if (iso[b] == 0) continue;
            if (iso[b] > 1 || hit >= 0) simple = false;
            hit = b;
        }
        if (!simple || hit < 0) {
            out.failure = QfFailure::left_right_mismatch;
            out.failure_detail = "left socle of class " + std::to_string(to_ours[a] + 1) +
                                 " is not simple";
            return out;
        }
        left_pi[to_ours[a]] = to_ours[hit];
    }
    for (int i = 0; i < n; ++i)
        if (left_pi[pi[i]] != i) {
            out.failure = QfFailure::left_right_mismatch;
            out.failure_detail = "soc(P(_" + std::to_string(pi[i] + 1) + "S)) is S" +
                                 std::to_string(left_pi[pi[i]] + 1) + ", expected S" +
                                 std::to_string(i + 1);
            return out;
        }

    out.is_qf = true;
    out.permutation = std::move(pi);
    out.left_permutation = std::move(left_pi);
    return out;
}

NakayamaData nakayama(const FiniteRing& r, const Caps& caps) {
    SimplesData data = simple_classes(r, caps);
    SimplesData op = simple_classes(opposite_ring(r), caps);
    return nakayama(data, op);
}

bool verify_propqf(const SimplesData& data, const NakayamaData& nak) {
    if (!nak.is_qf) throw NotQF();
    for (size_t i = 0; i < data.classes.size(); ++i)
        if (data.classes[i].endo_order != data.classes[nak.permutation[i]].endo_order)
            return false;
    return true;
}

}  // namespace ringforge
