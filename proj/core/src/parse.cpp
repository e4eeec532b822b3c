#include "ringforge/parse.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringforge/constructors.hpp"
#include "ringforge/corpus.hpp"
#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

Int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        Int v = std::stoll(s, &pos);
        if (pos != s.size()) throw ParseError(what + ": trailing characters in '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError(what + ": expected an integer, got '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError(what + ": integer out of range: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// key=value fields after the constructor tag.
std::string field(const std::vector<std::string>& parts, const std::string& key,
                  const std::string& expr) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i].rfind(key + "=", 0) == 0) return parts[i].substr(key.size() + 1);
    throw ParseError("missing field '" + key + "=' in '" + expr + "'");
}

FiniteRing parse_pathalg(const std::string& expr) {
    auto parts = split(expr, ':');
    QuiverSpec spec;
    spec.field_order = parse_int(field(parts, "q", expr), "pathalg q");
    spec.vertex_count = static_cast<int>(parse_int(field(parts, "vertices", expr),
                                                   "pathalg vertices"));
    std::string arrows = field(parts, "arrows", expr);
    for (const std::string& a : split(arrows, ',')) {
        auto ends = split(a, '>');
        if (ends.size() != 2)
            throw ParseError("arrow '" + a + "' must look like 1>2");
        int s = static_cast<int>(parse_int(ends[0], "arrow source"));
        int t = static_cast<int>(parse_int(ends[1], "arrow target"));
        spec.arrows.emplace_back(s - 1, t - 1);  // 1-based on the CLI
    }
    std::string rel = field(parts, "rel", expr);
    if (rel != "rad2")
        throw ParseError("only rel=rad2 is supported in constructor syntax");
    spec.rad_square_zero = true;
    return path_algebra_mod(spec);
}

FiniteRing parse_grpalg(const std::string& expr) {
    auto parts = split(expr, ':');
    Int q = parse_int(field(parts, "q", expr), "grpalg q");
    Int n = parse_int(field(parts, "cyclic", expr), "grpalg cyclic");
    if (n < 1) throw ParseError("grpalg cyclic order must be >= 1");
    return group_algebra(q, cyclic_group(static_cast<int>(n)));
}

// prod:(expr),(expr)[,(expr)...] with nesting-aware parenthesis matching.
FiniteRing parse_prod(const std::string& rest, const std::string& expr) {
    std::vector<std::string> factors;
    size_t i = 0;
    while (i < rest.size()) {
        if (rest[i] != '(')
            throw ParseError("prod factors must be parenthesized in '" + expr + "'");
        int depth = 1;
        size_t j = i + 1;
        for (; j < rest.size() && depth > 0; ++j) {
            if (rest[j] == '(') ++depth;
            if (rest[j] == ')') --depth;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses in '" + expr + "'");
        factors.push_back(rest.substr(i + 1, j - i - 2));
        i = j;
        if (i < rest.size()) {
            if (rest[i] != ',')
                throw ParseError("expected ',' between prod factors in '" + expr + "'");
            ++i;
        }
    }
    if (factors.size() < 2) throw ParseError("prod needs at least two factors");
    FiniteRing out = ring_from_expression(factors[0]);
    for (size_t f = 1; f < factors.size(); ++f)
        out = direct_product(out, ring_from_expression(factors[f]));
    return out;
}

}  // namespace

FiniteRing ring_from_expression(const std::string& expr) {
    auto colon = expr.find(':');
    std::string tag = expr.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : expr.substr(colon + 1);
    if (tag == "zmod") return zmod(parse_int(rest, "zmod"));
    if (tag == "mat" || tag == "tri") {
        auto inner_colon = rest.find(':');
        if (inner_colon == std::string::npos)
            throw ParseError(tag + " needs a size and a base ring: '" + expr + "'");
        Int n = parse_int(rest.substr(0, inner_colon), tag + " size");
        FiniteRing base = ring_from_expression(rest.substr(inner_colon + 1));
        return tag == "mat" ? matrix_ring(base, static_cast<int>(n))
                            : upper_triangular(base, static_cast<int>(n));
    }
    if (tag == "grpalg") return parse_grpalg(expr);
    if (tag == "pathalg") return parse_pathalg(expr);
    if (tag == "prod") return parse_prod(rest, expr);
    throw ParseError("unknown constructor '" + tag + "' in '" + expr + "'");
}

FiniteRing load_ring_input(const std::string& input) {
    if (std::filesystem::exists(input) && std::filesystem::is_regular_file(input)) {
        std::ifstream in(input);
        if (!in) throw ParseError("cannot read '" + input + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return load_ring_spec_json(buffer.str());
    }
    if (input.ends_with(".json"))
        throw ParseError("ring spec file not found: '" + input + "'");
    return ring_from_expression(input);
}

}  // namespace ringforge
