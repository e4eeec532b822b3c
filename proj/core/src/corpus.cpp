#include "ringforge/corpus.hpp"

#include <json.hpp>

#include "ringforge/errors.hpp"
#include "ringforge/parse.hpp"

namespace ringforge {

const std::vector<CorpusEntry>& default_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"Z2", "zmod:2"},
        {"Z4", "zmod:4"},
        {"Z6", "zmod:6"},
        {"Z8", "zmod:8"},
        {"Z12", "zmod:12"},
        {"Z27", "zmod:27"},
        {"Z64", "zmod:64"},
        {"M2F2", "mat:2:zmod:2"},
        {"M2Z4", "mat:2:zmod:4"},
        {"T2F2", "tri:2:zmod:2"},
        {"T2F3", "tri:2:zmod:3"},
        {"F2C2", "grpalg:q=2:cyclic=2"},
        {"F2C4", "grpalg:q=2:cyclic=4"},
        {"F3C3", "grpalg:q=3:cyclic=3"},
        {"F3C2", "grpalg:q=3:cyclic=2"},
        {"A2-rad2", "pathalg:q=2:vertices=2:arrows=1>2:rel=rad2"},
        {"kronecker-rad2", "pathalg:q=2:vertices=2:arrows=1>2,1>2:rel=rad2"},
        {"nakayama-cyclic-2", "pathalg:q=2:vertices=2:arrows=1>2,2>1:rel=rad2"},
        {"Z4xT2F2", "prod:(zmod:4),(tri:2:zmod:2)"},
    };
    return corpus;
}

FiniteRing corpus_ring(const std::string& name) {
    for (const auto& entry : default_corpus())
        if (entry.name == name)
            return ring_from_expression(entry.expression).with_name(entry.name);
    throw UnknownName(name);
}

std::string ring_spec_json(const FiniteRing& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name();
    j["orders"] = r.orders();
    j["one"] = r.one();
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int i = 0; i < r.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int jx = 0; jx < r.dim(); ++jx) row.push_back(r.table(i, jx));
        table.push_back(row);
    }
    j["mul"] = table;
    return j.dump(2) + "\n";
}

FiniteRing load_ring_spec_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("ring spec JSON: ") + e.what());
    }
    try {
        std::string name = j.value("name", std::string());
        auto orders = j.at("orders").get<std::vector<Int>>();
        auto one = j.at("one").get<Elem>();
        auto mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
        return make_ring(std::move(orders), std::move(one), std::move(mul), std::move(name));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ring spec JSON fields: ") + e.what());
    }
}

}  // namespace ringforge
