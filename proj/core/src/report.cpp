#include "ringforge/report.hpp"

#include <chrono>

#include <json.hpp>

#include "ringforge/errors.hpp"
#include "ringforge/oracle.hpp"

namespace ringforge {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

AnalysisReport analyze_ring(const FiniteRing& r, const Caps& caps, bool with_timing) {
    AnalysisReport rep;
    rep.with_timing = with_timing;
    rep.name = r.name();
    rep.size = r.size();
    rep.orders = r.orders();

    auto stage = [&](const char* name, auto&& fn) {
        auto start = Clock::now();
        fn();
        if (with_timing) rep.timings_ms.emplace_back(name, ms_since(start));
    };

    BlockContext ctx;
    stage("simples", [&] { ctx.data = simple_classes(r, caps); });
    stage("opposite", [&] { ctx.op_data = simple_classes(opposite_ring(r), caps); });
    stage("blocks", [&] { ctx.blocks = block_decomposition(ctx.data, caps); });
    stage("quivers", [&] {
        ctx.right_quiver = ext_quiver(ctx.data, QuiverSide::right, caps);
        ctx.left_quiver = ext_quiver_left(ctx.data, ctx.op_data);
    });
    stage("composition", [&] {
        ctx.composition = composition_table(ctx.data);
        ctx.linkage = linkage_graph(ctx.data, ctx.composition);
    });

    for (const auto& power : ctx.data.filtration.powers)
        rep.filtration_sizes.push_back(power.size());
    rep.nilpotency_index = ctx.data.filtration.nilpotency_index;

    for (size_t j = 0; j < ctx.data.classes.size(); ++j) {
        const auto& cls = ctx.data.classes[j];
        rep.classes.push_back({cls.simple_size, cls.multiplicity, cls.endo_order,
                               cls.characteristic, ctx.blocks.block_of_class[j]});
    }
    rep.block_sizes = ctx.blocks.block_sizes;
    rep.block_partition = partition_from_assignment(ctx.blocks.block_of_class,
                                                    static_cast<int>(ctx.data.classes.size()));
    rep.right_quiver = ctx.right_quiver.multiplicity;
    rep.left_quiver = ctx.left_quiver.multiplicity;
    rep.composition = ctx.composition.layers_per_class;

    stage("nakayama", [&] {
        NakayamaData nak = nakayama(ctx.data, ctx.op_data);
        rep.is_qf = nak.is_qf;
        if (nak.is_qf) {
            rep.permutation = nak.permutation;
            rep.left_permutation = nak.left_permutation;
            rep.endo_match = verify_propqf(ctx.data, nak);
        } else {
            rep.qf_failure = to_string(*nak.failure) +
                             (nak.failure_detail.empty() ? "" : ": " + nak.failure_detail);
        }
    });
    stage("theorems", [&] { rep.theorems = run_theorem_checks(ctx, caps); });
    return rep;
}

bool all_checks_pass(const TheoremReport& report) {
    return report.theorem_main.pass && report.lemma_equivalences.pass &&
           report.char_uniformity.pass && report.cardinality_basic.pass &&
           report.annihilator_lemma.pass && report.coprime_char.pass;
}

bool report_all_pass(const AnalysisReport& report) {
    bool qf_ok = !report.is_qf || (report.endo_match.has_value() && *report.endo_match);
    return all_checks_pass(report.theorems) && qf_ok;
}

namespace {

nlohmann::ordered_json verdict_json(const Verdict& v) {
    nlohmann::ordered_json out;
    out["pass"] = v.pass;
    if (!v.pass) out["witness"] = v.witness;
    return out;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep) {
    nlohmann::ordered_json j;
    j["ring"] = {{"name", rep.name}, {"size", rep.size}, {"orders", rep.orders}};
    j["radical"] = {{"filtration_sizes", rep.filtration_sizes},
                    {"nilpotency_index", rep.nilpotency_index}};

    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (size_t i = 0; i < rep.classes.size(); ++i) {
        const auto& c = rep.classes[i];
        classes.push_back({{"id", i + 1},
                           {"simple_size", c.simple_size},
                           {"multiplicity", c.multiplicity},
                           {"endo_field_order", c.endo_order},
                           {"characteristic", c.characteristic},
                           {"block", c.block + 1}});
    }
    j["classes"] = classes;

    nlohmann::ordered_json partition = nlohmann::ordered_json::array();
    for (const auto& group : rep.block_partition) {
        nlohmann::ordered_json g = nlohmann::ordered_json::array();
        for (int v : group) g.push_back(v + 1);
        partition.push_back(g);
    }
    j["blocks"] = {{"count", rep.block_sizes.size()},
                   {"sizes", rep.block_sizes},
                   {"partition", partition}};

    j["quiver"] = {{"right", rep.right_quiver}, {"left", rep.left_quiver}};
    j["composition"] = rep.composition;

    nlohmann::ordered_json nak;
    nak["is_qf"] = rep.is_qf;
    if (rep.is_qf) {
        nlohmann::ordered_json perm = nlohmann::ordered_json::array();
        for (int v : rep.permutation) perm.push_back(v + 1);
        nlohmann::ordered_json lperm = nlohmann::ordered_json::array();
        for (int v : rep.left_permutation) lperm.push_back(v + 1);
        nak["permutation"] = perm;
        nak["left_permutation"] = lperm;
        nak["endo_field_match"] = *rep.endo_match;
    } else {
        nak["failure_reason"] = rep.qf_failure;
    }
    j["nakayama"] = nak;

    nlohmann::ordered_json verdicts;
    verdicts["theorem_main"] = verdict_json(rep.theorems.theorem_main);
    verdicts["lemma_equivalences"] = verdict_json(rep.theorems.lemma_equivalences);
    verdicts["char_uniformity"] = verdict_json(rep.theorems.char_uniformity);
    verdicts["cardinality_basic"] = verdict_json(rep.theorems.cardinality_basic);
    verdicts["annihilator_lemma"] = verdict_json(rep.theorems.annihilator_lemma);
    verdicts["coprime_char"] = verdict_json(rep.theorems.coprime_char);
    j["theorems"] = verdicts;

    if (rep.with_timing) {
        nlohmann::ordered_json timings;
        for (const auto& [name, ms] : rep.timings_ms) timings[name] = ms;
        j["timing_ms"] = timings;
    }
    return j.dump(2) + "\n";
}

namespace {

Verdict verdict_from_json(const nlohmann::ordered_json& j) {
    Verdict v;
    v.pass = j.at("pass").get<bool>();
    if (j.contains("witness")) v.witness = j.at("witness").get<std::string>();
    return v;
}

}  // namespace

AnalysisReport report_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::parse_error& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    AnalysisReport rep;
    try {
        rep.name = j.at("ring").at("name").get<std::string>();
        rep.size = j.at("ring").at("size").get<Int>();
        rep.orders = j.at("ring").at("orders").get<std::vector<Int>>();
        rep.filtration_sizes = j.at("radical").at("filtration_sizes").get<std::vector<Int>>();
        rep.nilpotency_index = j.at("radical").at("nilpotency_index").get<int>();
        for (const auto& c : j.at("classes"))
            rep.classes.push_back({c.at("simple_size").get<Int>(),
                                   c.at("multiplicity").get<Int>(),
                                   c.at("endo_field_order").get<Int>(),
                                   c.at("characteristic").get<Int>(),
                                   c.at("block").get<int>() - 1});
        rep.block_sizes = j.at("blocks").at("sizes").get<std::vector<Int>>();
        for (const auto& grp : j.at("blocks").at("partition")) {
            std::vector<int> g;
            for (const auto& v : grp) g.push_back(v.get<int>() - 1);
            rep.block_partition.push_back(std::move(g));
        }
        rep.right_quiver = j.at("quiver").at("right").get<std::vector<std::vector<Int>>>();
        rep.left_quiver = j.at("quiver").at("left").get<std::vector<std::vector<Int>>>();
        rep.composition =
            j.at("composition").get<std::vector<std::vector<std::vector<Int>>>>();
        const auto& nak = j.at("nakayama");
        rep.is_qf = nak.at("is_qf").get<bool>();
        if (rep.is_qf) {
            for (const auto& v : nak.at("permutation"))
                rep.permutation.push_back(v.get<int>() - 1);
            for (const auto& v : nak.at("left_permutation"))
                rep.left_permutation.push_back(v.get<int>() - 1);
            rep.endo_match = nak.at("endo_field_match").get<bool>();
        } else {
            rep.qf_failure = nak.at("failure_reason").get<std::string>();
        }
        const auto& th = j.at("theorems");
        rep.theorems.theorem_main = verdict_from_json(th.at("theorem_main"));
        rep.theorems.lemma_equivalences = verdict_from_json(th.at("lemma_equivalences"));
        rep.theorems.char_uniformity = verdict_from_json(th.at("char_uniformity"));
        rep.theorems.cardinality_basic = verdict_from_json(th.at("cardinality_basic"));
        rep.theorems.annihilator_lemma = verdict_from_json(th.at("annihilator_lemma"));
        rep.theorems.coprime_char = verdict_from_json(th.at("coprime_char"));
        if (j.contains("timing_ms")) {
            rep.with_timing = true;
            for (const auto& [key, value] : j.at("timing_ms").items())
                rep.timings_ms.emplace_back(key, value.get<double>());
        }
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ParseError(std::string("report JSON fields: ") + e.what());
    }
    return rep;
}

CheckResult check_ring(const FiniteRing& r, const Caps& caps) {
    CheckResult out;
    out.ring_name = r.name();

    auto record = [&](std::string name, bool pass, std::string witness = "") {
        out.items.push_back({std::move(name), pass, false, std::move(witness)});
        out.all_pass = out.all_pass && out.items.back().pass;
    };
    auto record_skip = [&](std::string name, const TooLarge& e) {
        out.items.push_back({std::move(name), true, true, e.what()});
    };

    BlockContext ctx = analyze_blocks(r, caps);

    TheoremReport theorems = run_theorem_checks(ctx, caps);
    record("theorem_main", theorems.theorem_main.pass, theorems.theorem_main.witness);
    record("lemma_equivalences", theorems.lemma_equivalences.pass,
           theorems.lemma_equivalences.witness);
    record("char_uniformity", theorems.char_uniformity.pass, theorems.char_uniformity.witness);
    record("cardinality_basic", theorems.cardinality_basic.pass,
           theorems.cardinality_basic.witness);
    record("annihilator_lemma", theorems.annihilator_lemma.pass,
           theorems.annihilator_lemma.witness);
    record("coprime_char", theorems.coprime_char.pass, theorems.coprime_char.witness);

    NakayamaData nak = nakayama(ctx.data, ctx.op_data);
    if (nak.is_qf)
        record("propqf_endo_fields", verify_propqf(ctx.data, nak));
    else
        record("propqf_endo_fields", true, "vacuous: not QF (" + to_string(*nak.failure) + ")");

    // Oracle equivalences.
    try {
        Subgroup brute = oracle::brute_radical(r, caps);
        record("radical_oracle", brute == ctx.data.radical(),
               brute == ctx.data.radical()
                   ? ""
                   : "main |J| = " + std::to_string(ctx.data.radical().size()) +
                         ", brute |J| = " + std::to_string(brute.size()));
    } catch (const TooLarge& e) {
        record_skip("radical_oracle", e);
    }

    try {
        auto brute = oracle::brute_central_idempotents(r, caps);
        auto main = central_idempotents(r, center(r), caps);
        std::vector<Elem> main_elems;
        for (const auto& fi : main) main_elems.push_back(fi.value);
        record("central_idempotents_oracle", brute == main_elems,
               brute == main_elems ? ""
                                   : "main count " + std::to_string(main_elems.size()) +
                                         ", brute count " + std::to_string(brute.size()));
    } catch (const TooLarge& e) {
        record_skip("central_idempotents_oracle", e);
    }

    for (size_t i = 0; i < ctx.data.classes.size(); ++i) {
        std::string name = "socle_oracle_class" + std::to_string(i + 1);
        try {
            Subgroup cover = projective_cover(r, ctx.data.classes[i].e);
            Subgroup main = right_socle_of_projective(ctx.data, ctx.data.classes[i].e);
            Subgroup brute = oracle::brute_socle(r, cover, caps);
            record(name, main == brute,
                   main == brute ? ""
                                 : "main |soc| = " + std::to_string(main.size()) +
                                       ", brute |soc| = " + std::to_string(brute.size()));
        } catch (const TooLarge& e) {
            record_skip(name, e);
        }
    }

    for (size_t i = 0; i < ctx.data.classes.size(); ++i)
        for (size_t jx = 0; jx < ctx.data.classes.size(); ++jx) {
            std::string name = "ext_oracle_" + std::to_string(i + 1) + "_" +
                               std::to_string(jx + 1);
            try {
                bool main = ext_nonzero(ctx.data, static_cast<int>(i), static_cast<int>(jx));
                bool brute = oracle::brute_ext_nonsplit(ctx.data, static_cast<int>(i),
                                                        static_cast<int>(jx), caps);
                record(name, main == brute,
                       main == brute ? ""
                                     : std::string("main says ") + (main ? "nonzero" : "zero") +
                                           ", oracle says " + (brute ? "nonsplit" : "split"));
            } catch (const TooLarge& e) {
                record_skip(name, e);
            }
        }
    return out;
}

std::string check_result_to_json(const std::vector<CheckResult>& results,
                                 const std::vector<std::string>& ring_specs) {
    nlohmann::ordered_json j;
    int pass = 0, fail = 0, skipped = 0;
    nlohmann::ordered_json rings = nlohmann::ordered_json::array();
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& res = results[i];
        nlohmann::ordered_json entry;
        entry["ring"] = res.ring_name;
        entry["all_pass"] = res.all_pass;
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const auto& item : res.items) {
            nlohmann::ordered_json it;
            it["name"] = item.name;
            it["pass"] = item.pass;
            if (item.skipped) it["skipped"] = true;
            if (!item.witness.empty()) it["witness"] = item.witness;
            items.push_back(it);
            if (item.skipped)
                ++skipped;
            else if (item.pass)
                ++pass;
            else
                ++fail;
        }
        entry["checks"] = items;
        if (!res.all_pass && i < ring_specs.size() && !ring_specs[i].empty())
            entry["counterexample_ring_spec"] =
                nlohmann::ordered_json::parse(ring_specs[i]);
        rings.push_back(entry);
    }
    j["rings"] = rings;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
    j["all_pass"] = fail == 0;
    return j.dump(2) + "\n";
}

}  // namespace ringforge
