#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subreg/classify.hpp"
#include "subreg/commutative.hpp"
#include "subreg/generators.hpp"
#include "subreg/io.hpp"
#include "subreg/ops.hpp"
#include "subreg/ponfa.hpp"
#include "subreg/solve.hpp"
#include "subreg/unary.hpp"

namespace {

using json = nlohmann::json;
using namespace subreg;

constexpr int kExitUsage = 64;
constexpr int kExitFile = 65;

Caps caps_from_env() {
    Caps caps;
    auto read = [](const char* var, std::size_t& slot) {
        if (const char* value = std::getenv(var))
            slot = std::strtoull(value, nullptr, 10);
    };
    read("SUBREG_DETERMINIZE_CAP", caps.determinize_states);
    read("SUBREG_RESIDUAL_CAP", caps.residual_states);
    read("SUBREG_MONOID_CAP", caps.monoid_elements);
    read("SUBREG_PRODUCT_CAP", caps.product_states);
    read("SUBREG_TUPLE_CAP", caps.tuple_combinations);
    return caps;
}

std::vector<Automaton> load_all(const std::vector<std::string>& paths) {
    std::vector<Automaton> out;
    for (const auto& path : paths) {
        auto batch = load_automata_file(path);
        for (auto& a : batch) {
            if (a.name().empty())
                a.set_name(path);
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_automata(const std::vector<Automaton>& list, const std::string& out_path) {
    if (out_path.empty()) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i > 0)
                std::cout << '\n';
            std::cout << print_automaton(list[i]);
        }
    } else {
        save_automata_file(out_path, list);
    }
}

json report_to_json(const ClassReport& r) {
    json j;
    j["partially_ordered"] = r.partially_ordered;
    j["confluent"] = r.confluent;
    j["commutative"] = r.commutative;
    j["finite"] = r.finite;
    j["cofinite"] = r.cofinite;
    if (r.aperiodic)
        j["aperiodic"] = *r.aperiodic;
    else
        j["aperiodic"] = nullptr;
    j["shuffle_ideal"] = r.shuffle_ideal;
    j["piecewise_testable"] = r.piecewise_testable;
    j["suggested_level"] = to_string(r.suggested_level);
    return j;
}

int cmd_classify(const std::string& path, bool as_json) {
    auto automata = load_automata_file(path);
    const Caps caps = caps_from_env();
    json all = json::array();
    for (const Automaton& a : automata) {
        ClassReport r = classify(a, caps);
        if (as_json) {
            json j = report_to_json(r);
            j["name"] = a.name();
            all.push_back(j);
        } else {
            if (automata.size() > 1)
                std::cout << "automaton: " << a.name() << '\n';
            std::cout << "partially_ordered: " << (r.partially_ordered ? "true" : "false") << '\n'
                      << "confluent: " << (r.confluent ? "true" : "false") << '\n'
                      << "commutative: " << (r.commutative ? "true" : "false") << '\n'
                      << "finite: " << (r.finite ? "true" : "false") << '\n'
                      << "cofinite: " << (r.cofinite ? "true" : "false") << '\n'
                      << "aperiodic: " << (r.aperiodic ? (*r.aperiodic ? "true" : "false") : "unknown")
                      << '\n'
                      << "shuffle_ideal: " << (r.shuffle_ideal ? "true" : "false") << '\n'
                      << "piecewise_testable: " << (r.piecewise_testable ? "true" : "false") << '\n'
                      << "suggested_level: " << to_string(r.suggested_level) << '\n';
        }
    }
    if (as_json)
        std::cout << all.dump(2) << '\n';
    return 0;
}

int cmd_ine(const std::vector<std::string>& files, const std::string& promise_name,
            const std::string& strategy, bool certify, bool no_verify, bool as_json) {
    IneInstance inst;
    inst.automata = load_all(files);
    if (!promise_name.empty()) {
        auto p = promise_from_string(promise_name);
        if (!p) {
            std::cerr << "unknown promise level: " << promise_name << '\n';
            return kExitUsage;
        }
        inst.promise = *p;
    }
    SolveOptions options;
    options.caps = caps_from_env();
    options.certify = certify;
    options.verify_promises = !no_verify;
    if (!strategy.empty())
        options.strategy = strategy;

    IneResult result = solve(inst, options);
    if (as_json) {
        json j;
        j["nonempty"] = result.nonempty;
        j["strategy"] = result.strategy_used;
        j["promise_checked"] = result.promise_checked;
        if (result.witness)
            j["witness"] = inst.automata.front().alphabet().render(*result.witness);
        else
            j["witness"] = nullptr;
        std::cout << j.dump(2) << '\n';
    } else {
        if (result.nonempty)
            std::cout << inst.automata.front().alphabet().render(*result.witness) << '\n';
        std::cout << "# status: " << (result.nonempty ? "nonempty" : "empty") << '\n'
                  << "# strategy: " << result.strategy_used << '\n'
                  << "# promise-checked: " << (result.promise_checked ? "yes" : "no") << '\n';
    }
    return result.nonempty ? 0 : 1;
}

int cmd_generate(const std::string& kind, const std::string& graph_path,
                 const std::string& cnf_path, const std::string& system_path, std::size_t n,
                 std::size_t k, std::size_t s, std::size_t t, const std::string& out_path) {
    if (kind == "zimin") {
        Word u = zimin(n);
        std::cout << digit_alphabet(n).render(u) << '\n';
        return 0;
    }
    std::vector<Automaton> out;
    if (kind == "mn") {
        out.push_back(m_nfa(n));
    } else if (kind == "mpp") {
        out.push_back(mpp_nfa(n));
    } else if (kind == "ln") {
        out.push_back(l_nfa(n));
    } else if (kind == "vc") {
        auto inst = vertex_cover_to_ine(parse_graph(read_file(graph_path)), k);
        out = std::move(inst.automata);
    } else if (kind == "sat") {
        auto inst = sat_to_commutative_ine(parse_cnf(read_file(cnf_path)));
        out = std::move(inst.automata);
    } else if (kind == "gap2") {
        out.push_back(gap2_to_nfa(parse_graph(read_file(graph_path)), s, t));
    } else if (kind == "gap1") {
        out.push_back(gap1_to_dfa(parse_graph(read_file(graph_path)), s, t).automaton());
    } else if (kind == "monoid") {
        auto inst = monoid_to_ine(parse_transformation_system(read_file(system_path)));
        out = std::move(inst.automata);
    } else {
        std::cerr << "unknown generator: " << kind << '\n';
        return kExitUsage;
    }
    emit_automata(out, out_path);
    return 0;
}

int cmd_ponfa_minimize(const std::string& path) {
    auto automata = load_automata_file(path);
    const Caps caps = caps_from_env();
    for (const Automaton& a : automata) {
        auto [merged, trace] = ponfa_merge_minimize(a, caps.residual_states);
        std::cout << print_automaton(merged);
        std::cout << "# merges: " << trace.size() << '\n';
        for (const MergeEvent& e : trace)
            std::cout << "# merge "
                      << (e.kind == MergeEvent::Kind::Incomparable ? "incomparable"
                                                                   : "comparable-stripped")
                      << ' ' << e.first << ' ' << e.second << " -> " << e.result << '\n';
    }
    return 0;
}

int cmd_unary_lengths(const std::string& path) {
    auto automata = load_automata_file(path);
    const Caps caps = caps_from_env();
    for (const Automaton& a : automata) {
        TailCycle tc = to_tail_cycle(a, caps.determinize_states);
        if (tc.tail_exceeds_quadratic_bound)
            std::cerr << "warning: normal-form tail exceeds state_count^2 for " << a.name()
                      << '\n';
        SemilinearSet s = unary_lengths(a, caps.determinize_states);
        std::cout << "finite:";
        for (auto v : s.finite_part)
            std::cout << ' ' << v;
        std::cout << '\n';
        for (const Progression& p : s.progressions)
            std::cout << "progression: " << p.offset << ' ' << p.period << '\n';
    }
    return 0;
}

int cmd_bench(const std::vector<std::string>& files, const std::string& promise_name,
              bool no_verify) {
    IneInstance inst;
    inst.automata = load_all(files);
    if (!promise_name.empty()) {
        auto p = promise_from_string(promise_name);
        if (!p) {
            std::cerr << "unknown promise level: " << promise_name << '\n';
            return kExitUsage;
        }
        inst.promise = *p;
    }
    std::string label = files.front();
    for (std::size_t i = 1; i < files.size(); ++i)
        label += "+" + files[i];

    // Strategy sweep: the oracle always runs, the others when applicable;
    // any verdict disagreement is a solver-soundness failure.
    std::cout << "instance,strategy,verdict,witness_length,wall_ms\n";
    std::optional<bool> reference;
    bool disagreement = false;
    for (const std::string& name : strategy_names()) {
        SolveOptions options;
        options.caps = caps_from_env();
        options.verify_promises = !no_verify;
        options.strategy = name;
        auto start = std::chrono::steady_clock::now();
        IneResult result;
        try {
            result = solve(inst, options);
        } catch (const std::exception&) {
            continue; // strategy not applicable to this instance
        }
        auto wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        std::cout << label << ',' << result.strategy_used << ','
                  << (result.nonempty ? "nonempty" : "empty") << ','
                  << (result.witness ? std::to_string(result.witness->size()) : "-") << ','
                  << wall << '\n';
        if (!reference)
            reference = result.nonempty;
        else if (*reference != result.nonempty)
            disagreement = true;
    }
    if (disagreement) {
        std::cerr << "error: strategy verdicts disagree on " << label << '\n';
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection non-emptiness toolkit for subregular automata classes"};
    app.require_subcommand(1);

    std::string file, promise, strategy, out_path;
    std::string graph_path, cnf_path, system_path, kind;
    std::vector<std::string> files;
    std::size_t n = 1, k = 0, s = 0, t = 0;
    bool certify = false, no_verify = false, as_json = false;

    auto* classify_cmd = app.add_subcommand("classify", "Report structural language classes");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_flag("--json", as_json);

    auto* ine_cmd = app.add_subcommand("ine", "Decide intersection non-emptiness");
    ine_cmd->add_option("files", files)->required()->expected(-1);
    ine_cmd->add_option("--promise", promise, "Promised level (st-0, st-half, dd-0, st-1, st-3/2, commutative, commutative-sf)");
    ine_cmd->add_option("--strategy", strategy, "Force a strategy by name");
    ine_cmd->add_flag("--certify", certify, "Run in-solver certification checks");
    ine_cmd->add_flag("--no-verify", no_verify, "Trust promises without re-checking");
    ine_cmd->add_flag("--json", as_json);

    auto* gen_cmd = app.add_subcommand("generate", "Generate instance families");
    gen_cmd->add_option("kind", kind, "vc|sat|zimin|mn|mpp|ln|gap2|gap1|monoid")->required();
    gen_cmd->add_option("n", n, "Family index for zimin/mn/mpp/ln");
    gen_cmd->add_option("--graph", graph_path);
    gen_cmd->add_option("--cnf", cnf_path);
    gen_cmd->add_option("--system", system_path);
    gen_cmd->add_option("--k", k);
    gen_cmd->add_option("--s", s);
    gen_cmd->add_option("--t", t);
    gen_cmd->add_option("-o,--output", out_path);

    auto* ponfa_cmd = app.add_subcommand("ponfa-minimize", "Residual-equivalence merging");
    ponfa_cmd->add_option("file", file)->required();

    auto* unary_cmd = app.add_subcommand("unary-lengths", "Semilinear length set of a unary NFA");
    unary_cmd->add_option("file", file)->required();

    auto* bench_cmd = app.add_subcommand("bench", "Compare strategies on one instance");
    bench_cmd->add_option("files", files)->required()->expected(-1);
    bench_cmd->add_option("--promise", promise);
    bench_cmd->add_flag("--no-verify", no_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(file, as_json);
        if (ine_cmd->parsed())
            return cmd_ine(files, promise, strategy, certify, no_verify, as_json);
        if (gen_cmd->parsed())
            return cmd_generate(kind, graph_path, cnf_path, system_path, n, k, s, t, out_path);
        if (ponfa_cmd->parsed())
            return cmd_ponfa_minimize(file);
        if (unary_cmd->parsed())
            return cmd_unary_lengths(file);
        if (bench_cmd->parsed())
            return cmd_bench(files, promise, no_verify);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFile;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return kExitUsage;
}
