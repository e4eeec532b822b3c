#pragma once

#include <string>
#include <vector>

#include "ringforge/ring.hpp"

namespace ringforge {

struct CorpusEntry {
    std::string name;
    std::string expression;  // constructor syntax, see parse.hpp
};

// The built-in test corpus: local / semisimple / basic / non-basic / QF /
// non-QF / multi-block / J^2 != 0 / nontrivial-permutation cases, all of
// size <= 729.
const std::vector<CorpusEntry>& default_corpus();

FiniteRing corpus_ring(const std::string& name);  // throws UnknownName

// Ring-spec JSON: { "name", "orders", "one", "mul" }.
std::string ring_spec_json(const FiniteRing& r);
FiniteRing load_ring_spec_json(const std::string& text);  // revalidates via make_ring

}  // namespace ringforge
