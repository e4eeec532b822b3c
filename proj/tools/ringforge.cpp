// ringforge: structural analysis of finite rings from the command line.
//
// Subcommands:
//   analyze <input>   full AnalysisReport as JSON
//   quiver <input>    Ext quiver as DOT
//   check             theorem verifiers + brute-force oracles, corpus or ring
//   corpus            list or emit the built-in corpus
//
// Exit codes: 0 ok, 1 input error, 2 counterexample/verifier failure.

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ringforge/corpus.hpp"
#include "ringforge/dot.hpp"
#include "ringforge/errors.hpp"
#include "ringforge/parse.hpp"
#include "ringforge/report.hpp"

namespace {

using namespace ringforge;

Caps caps_from_flags(const std::vector<std::string>& kvs) {
    Caps caps;
    std::map<std::string, Int*> fields{
        {"elements", &caps.elements},         {"structure_scan", &caps.structure_scan},
        {"oracle_ring", &caps.oracle_ring},   {"oracle_module", &caps.oracle_module},
        {"oracle_pair", &caps.oracle_pair},   {"oracle_budget", &caps.oracle_budget},
    };
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParseError("--caps expects KEY=VALUE, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        auto it = fields.find(key);
        if (it == fields.end()) throw ParseError("unknown cap '" + key + "'");
        try {
            *it->second = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("cap '" + key + "' needs an integer value");
        }
    }
    return caps;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write to '" + out_path + "'");
    out << text;
}

int run_analyze(const std::string& input, const std::string& out_path,
                const std::vector<std::string>& cap_flags, bool no_timing) {
    Caps caps = caps_from_flags(cap_flags);
    FiniteRing ring = load_ring_input(input);
    AnalysisReport rep = analyze_ring(ring, caps, !no_timing);
    write_output(report_to_json(rep), out_path);
    return report_all_pass(rep) ? 0 : 2;
}

int run_quiver(const std::string& input, const std::string& out_path,
               const std::vector<std::string>& cap_flags) {
    Caps caps = caps_from_flags(cap_flags);
    FiniteRing ring = load_ring_input(input);
    AnalysisReport rep = analyze_ring(ring, caps, false);
    write_output(quiver_dot(rep), out_path);
    return 0;
}

int run_check(const std::string& ring_input, bool use_corpus, const std::string& out_path,
              const std::vector<std::string>& cap_flags, int jobs) {
    Caps caps = caps_from_flags(cap_flags);
    std::vector<FiniteRing> rings;
    if (use_corpus) {
        for (const auto& entry : default_corpus()) rings.push_back(corpus_ring(entry.name));
    } else {
        rings.push_back(load_ring_input(ring_input));
    }

    std::vector<CheckResult> results(rings.size());
    std::vector<std::string> specs(rings.size());
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= rings.size()) return;
            results[i] = check_ring(rings[i], caps);
            if (!results[i].all_pass) specs[i] = ring_spec_json(rings[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    write_output(check_result_to_json(results, specs), out_path);
    for (const auto& res : results)
        if (!res.all_pass) return 2;
    return 0;
}

int run_corpus(bool list, const std::string& emit_name, const std::string& out_path) {
    if (list) {
        std::string out;
        for (const auto& entry : default_corpus())
            out += entry.name + "\t" + entry.expression + "\n";
        write_output(out, out_path);
        return 0;
    }
    write_output(ring_spec_json(corpus_ring(emit_name)), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis of finite associative unital rings"};
    app.require_subcommand(1);

    std::string input, out_path, emit_name, ring_input;
    std::vector<std::string> cap_flags;
    bool no_timing = false, use_corpus = false, list = false;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    auto* analyze = app.add_subcommand("analyze", "full structural report as JSON");
    analyze->add_option("input", input, "ring spec file or constructor expression")
        ->required();
    analyze->add_option("--out", out_path, "write to a file instead of stdout");
    analyze->add_option("--caps", cap_flags, "cap overrides, KEY=VALUE");
    analyze->add_flag("--no-timing", no_timing, "omit timings (for byte-stable output)");

    auto* quiver = app.add_subcommand("quiver", "Ext quiver as DOT");
    quiver->add_option("input", input, "ring spec file or constructor expression")
        ->required();
    quiver->add_option("--out", out_path, "write to a file instead of stdout");
    quiver->add_option("--caps", cap_flags, "cap overrides, KEY=VALUE");
    bool dot_flag = false;
    quiver->add_flag("--dot", dot_flag, "emit DOT (the default and only format)");

    auto* check = app.add_subcommand("check", "verify theorems and oracle equivalences");
    std::string corpus_name;
    auto* corpus_opt =
        check->add_option("--corpus", corpus_name, "run the built-in corpus ('default')")
            ->expected(0, 1);
    check->add_option("--ring", ring_input, "a single ring input instead of the corpus");
    check->add_option("--out", out_path, "write to a file instead of stdout");
    check->add_option("--caps", cap_flags, "cap overrides, KEY=VALUE");
    check->add_option("--jobs", jobs, "parallel workers over corpus entries");

    auto* corpus = app.add_subcommand("corpus", "list or emit the built-in corpus");
    std::string action;
    corpus->add_option("action", action, "'list' or 'emit'")
        ->required()
        ->check(CLI::IsMember({"list", "emit"}));
    corpus->add_option("name", emit_name, "corpus ring name for 'emit'");
    corpus->add_option("--out", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(input, out_path, cap_flags, no_timing);
        if (app.got_subcommand(quiver)) return run_quiver(input, out_path, cap_flags);
        if (app.got_subcommand(check)) {
            use_corpus = corpus_opt->count() > 0;
            if (use_corpus && !corpus_name.empty() && corpus_name != "default") {
                std::cerr << "check: the only built-in corpus is 'default'\n";
                return 1;
            }
            if (!use_corpus && ring_input.empty()) {
                std::cerr << "check: pass --corpus or --ring <input>\n";
                return 1;
            }
            return run_check(ring_input, use_corpus, out_path, cap_flags, jobs);
        }
        if (app.got_subcommand(corpus)) {
            list = action == "list";
            if (!list && emit_name.empty()) {
                std::cerr << "corpus: 'emit' needs a ring name\n";
                return 1;
            }
            return run_corpus(list, emit_name, out_path);
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
