#include "subreg/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "subreg/classify.hpp"
#include "subreg/commutative.hpp"
#include "subreg/ops.hpp"
#include "subreg/ponfa.hpp"

namespace subreg {

std::string to_string(Promise p) {
    switch (p) {
    case Promise::ST0: return "st-0";
    case Promise::ST_HALF: return "st-half";
    case Promise::DD0: return "dd-0";
    case Promise::ST1: return "st-1";
    case Promise::ST32: return "st-3/2";
    case Promise::COMMUTATIVE: return "commutative";
    case Promise::COMMUTATIVE_SF: return "commutative-sf";
    case Promise::NONE: return "none";
    }
    return "none";
}

std::optional<Promise> promise_from_string(const std::string& s) {
    static const std::map<std::string, Promise> table = {
        {"st-0", Promise::ST0},         {"st0", Promise::ST0},
        {"st-half", Promise::ST_HALF},  {"st-1/2", Promise::ST_HALF},
        {"dd-0", Promise::DD0},         {"dd0", Promise::DD0},
        {"st-1", Promise::ST1},         {"st1", Promise::ST1},
        {"st-3/2", Promise::ST32},      {"st32", Promise::ST32},
        {"commutative", Promise::COMMUTATIVE},
        {"commutative-sf", Promise::COMMUTATIVE_SF},
        {"none", Promise::NONE},
    };
    auto it = table.find(s);
    if (it == table.end())
        return std::nullopt;
    return it->second;
}

void IneInstance::validate() const {
    if (automata.empty())
        throw std::invalid_argument("instance has no automata");
    for (const Automaton& a : automata) {
        a.validate();
        if (!(a.alphabet() == automata.front().alphabet()))
            throw std::invalid_argument("instance automata do not share one alphabet");
    }
}

IneResult solve_st0(const IneInstance& inst) {
    inst.validate();
    IneResult result;
    result.strategy_used = "st0";
    result.nonempty = std::all_of(inst.automata.begin(), inst.automata.end(),
                                  [](const Automaton& a) { return a.has_final_initial(); });
    if (result.nonempty)
        result.witness = Word{};
    return result;
}

IneResult solve_st_half(const IneInstance& inst, bool certify, const Caps& caps) {
    inst.validate();
    IneResult result;
    result.strategy_used = "st-half";
    Word concatenation;
    const std::size_t k = inst.automata.front().alphabet().size();
    for (const Automaton& a : inst.automata) {
        auto w = shortest_word(a, caps.determinize_states);
        if (!w) {
            result.nonempty = false;
            return result;
        }
        if (certify) {
            // Membership probe (a_1 a_2 ... a_k)^{l_i}: under the shuffle
            // ideal promise this word must be accepted whenever L_i != {}.
            Word probe;
            probe.reserve(k * w->size());
            for (std::size_t rep = 0; rep < w->size(); ++rep)
                for (Letter x = 0; x < k; ++x)
                    probe.push_back(x);
            if (!accepts(a, probe))
                throw PromiseViolation("st-half certification failed: language is not a shuffle ideal");
            result.promise_checked = true;
        }
        concatenation.insert(concatenation.end(), w->begin(), w->end());
    }
    result.nonempty = true;
    result.witness = std::move(concatenation);
    return result;
}

namespace {

// Words of the finite language of `d` in (length, lex) order, passed to
// `test` until it returns true; yields that word.
std::optional<Word> enumerate_finite(const Automaton& a, const Caps& caps,
                                     const std::function<bool(const Word&)>& test) {
    Automaton t = trim(determinize(a, caps.determinize_states).automaton());
    if (t.state_count() == 0)
        return std::nullopt;
    auto longest = longest_word_length(t);
    if (!longest)
        return std::nullopt;

    // Longest remaining path per state, for pruning depth-first walks.
    const std::size_t n = t.state_count();
    std::vector<std::int64_t> max_rem(n, -1);
    for (State q : t.finals())
        max_rem[q] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q)
            for (Letter x = 0; x < t.alphabet().size(); ++x)
                for (State to : t.successors(q, x))
                    if (max_rem[to] >= 0 && max_rem[to] + 1 > max_rem[q]) {
                        max_rem[q] = max_rem[to] + 1;
                        changed = true;
                    }
    }

    Word word;
    // Depth-first over words of exact length L, letters in alphabet order.
    std::function<std::optional<Word>(const std::vector<State>&, std::size_t)> walk =
        [&](const std::vector<State>& states, std::size_t remaining) -> std::optional<Word> {
        if (remaining == 0) {
            bool final_hit = std::any_of(states.begin(), states.end(),
                                         [&](State q) { return t.is_final(q); });
            if (final_hit && test(word))
                return word;
            return std::nullopt;
        }
        for (Letter x = 0; x < t.alphabet().size(); ++x) {
            std::vector<State> next;
            for (State q : states)
                for (State to : t.successors(q, x))
                    next.push_back(to);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            bool viable = std::any_of(next.begin(), next.end(), [&](State q) {
                return max_rem[q] + 1 >= static_cast<std::int64_t>(remaining);
            });
            if (!viable)
                continue;
            word.push_back(x);
            if (auto hit = walk(next, remaining - 1))
                return hit;
            word.pop_back();
        }
        return std::nullopt;
    };

    for (std::size_t len = 0; len <= *longest; ++len) {
        std::vector<State> start = t.initials();
        if (auto hit = walk(start, len))
            return hit;
    }
    return std::nullopt;
}

} // namespace

IneResult solve_dd0(const IneInstance& inst, const Caps& caps) {
    inst.validate();
    IneResult result;
    result.strategy_used = "dd0";
    result.promise_checked = true;

    std::optional<std::size_t> finite_pick;
    std::int64_t cofinite_bound = -1;
    for (std::size_t i = 0; i < inst.automata.size(); ++i) {
        const Automaton& a = inst.automata[i];
        if (is_finite(a)) {
            if (!finite_pick)
                finite_pick = i;
        } else if (is_cofinite(a, caps.determinize_states)) {
            auto longest_missing = complement_longest_word(a, caps.determinize_states);
            cofinite_bound = std::max(
                cofinite_bound, longest_missing ? static_cast<std::int64_t>(*longest_missing) : -1);
        } else {
            throw PromiseViolation("dd0: language is neither finite nor cofinite");
        }
    }

    if (!finite_pick) {
        // All cofinite: (a_1)^{B+1} is missed by no automaton.
        Word w(static_cast<std::size_t>(cofinite_bound + 1), 0);
        for (const Automaton& a : inst.automata)
            if (!accepts(a, w))
                throw std::logic_error("dd0: cofinite witness rejected");
        result.nonempty = true;
        result.witness = std::move(w);
        return result;
    }

    auto hit = enumerate_finite(inst.automata[*finite_pick], caps, [&](const Word& w) {
        return std::all_of(inst.automata.begin(), inst.automata.end(),
                           [&](const Automaton& a) { return accepts(a, w); });
    });
    result.nonempty = hit.has_value();
    result.witness = std::move(hit);
    return result;
}

IneResult solve_via_monoid(const IneInstance& inst, const Caps& caps) {
    inst.validate();
    IneResult result;
    result.strategy_used = "monoid";

    std::vector<State> offsets;
    std::size_t total = 0;
    for (const Automaton& a : inst.automata) {
        if (!a.deterministic_total())
            throw std::invalid_argument("solve_via_monoid: inputs must be total DFAs");
        offsets.push_back(static_cast<State>(total));
        total += a.state_count();
    }

    // Letter actions on the disjoint union of the state sets.
    const std::size_t k = inst.automata.front().alphabet().size();
    std::vector<std::vector<State>> letters(k, std::vector<State>(total));
    for (std::size_t i = 0; i < inst.automata.size(); ++i) {
        const Automaton& a = inst.automata[i];
        for (State q = 0; q < a.state_count(); ++q)
            for (Letter x = 0; x < k; ++x)
                letters[x][offsets[i] + q] = offsets[i] + a.successors(q, x).front();
    }

    auto satisfies = [&](const std::vector<State>& t) {
        for (std::size_t i = 0; i < inst.automata.size(); ++i) {
            const Automaton& a = inst.automata[i];
            State image = t[offsets[i] + a.initials().front()];
            if (!a.is_final(image - offsets[i]))
                return false;
        }
        return true;
    };

    std::vector<State> identity(total);
    for (std::size_t q = 0; q < total; ++q)
        identity[q] = static_cast<State>(q);

    // BFS closure; the first satisfying element yields the shortest witness.
    std::map<std::vector<State>, std::size_t> ids;
    std::vector<std::vector<State>> elems;
    std::vector<std::pair<std::size_t, Letter>> parent;
    auto word_of = [&](std::size_t id) {
        Word w;
        while (id != 0) {
            w.push_back(parent[id].second);
            id = parent[id].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    ids.emplace(identity, 0);
    elems.push_back(identity);
    parent.emplace_back(0, 0);
    if (satisfies(identity)) {
        result.nonempty = true;
        result.witness = Word{};
        return result;
    }
    for (std::size_t cur = 0; cur < elems.size(); ++cur) {
        for (Letter x = 0; x < k; ++x) {
            std::vector<State> next(total);
            for (std::size_t q = 0; q < total; ++q)
                next[q] = letters[x][elems[cur][q]];
            if (ids.contains(next))
                continue;
            if (elems.size() >= caps.monoid_elements)
                throw CapExceeded("solve_via_monoid: monoid cap exceeded");
            std::size_t id = elems.size();
            ids.emplace(next, id);
            elems.push_back(std::move(next));
            parent.emplace_back(cur, x);
            if (satisfies(elems[id])) {
                result.nonempty = true;
                result.witness = word_of(id);
                return result;
            }
        }
    }
    result.nonempty = false;
    return result;
}

namespace {

IneResult wrap_word(std::optional<Word> w, std::string strategy, bool checked) {
    IneResult result;
    result.strategy_used = std::move(strategy);
    result.promise_checked = checked;
    result.nonempty = w.has_value();
    result.witness = std::move(w);
    return result;
}

IneResult run_commutative_dfa(const IneInstance& inst, const SolveOptions& options) {
    std::vector<DfaView> dfas;
    for (const Automaton& a : inst.automata)
        dfas.push_back(minimize(determinize(a, options.caps.determinize_states)));
    auto hit = commutative_dfa_ine(dfas, options.verify_promises);
    return wrap_word(hit ? std::optional<Word>(hit->to_word()) : std::nullopt, "commutative-dfa",
                     options.verify_promises);
}

IneResult run_tsf(const IneInstance& inst, const SolveOptions& options) {
    auto hit = totally_star_free_ine(inst.automata, options.verify_promises, options.caps);
    return wrap_word(hit ? std::optional<Word>(hit->to_word()) : std::nullopt, "tsf",
                     options.verify_promises);
}

IneResult run_commutative_nfa(const IneInstance& inst, const SolveOptions& options) {
    return wrap_word(commutative_nfa_ine(inst.automata, options.verify_promises, options.caps),
                     "commutative-nfa", options.verify_promises);
}

IneResult run_ponfa_bounded(const IneInstance& inst, const SolveOptions& options) {
    return wrap_word(bounded_witness_ine(inst.automata, options.caps), "ponfa-bounded", false);
}

IneResult run_oracle(const IneInstance& inst, const SolveOptions& options,
                     const char* label = "oracle") {
    return wrap_word(ine_oracle(inst.automata, options.caps.product_states), label, false);
}

void verify_class(const IneInstance& inst, Promise promise, const Caps& caps) {
    for (const Automaton& a : inst.automata) {
        ClassReport report = classify(a, caps);
        bool ok = true;
        switch (promise) {
        case Promise::ST0: ok = report.suggested_level == SuggestedLevel::ST0; break;
        case Promise::ST_HALF: ok = report.shuffle_ideal; break;
        case Promise::DD0: ok = report.finite || report.cofinite; break;
        case Promise::ST1: ok = report.piecewise_testable; break;
        default: break;
        }
        if (!ok)
            throw PromiseViolation("promise " + to_string(promise) +
                                   " violated by automaton " +
                                   (a.name().empty() ? std::string("<unnamed>") : a.name()));
    }
}

} // namespace

const std::vector<std::string>& strategy_names() {
    static const std::vector<std::string> names = {
        "st0",        "st-half",         "dd0", "commutative", "commutative-nfa",
        "tsf",        "ponfa-bounded",   "monoid", "oracle",
    };
    return names;
}

IneResult solve(const IneInstance& inst, const SolveOptions& options) {
    inst.validate();

    if (options.strategy) {
        const std::string& name = *options.strategy;
        if (name == "st0") {
            if (options.verify_promises)
                verify_class(inst, Promise::ST0, options.caps);
            IneResult r = solve_st0(inst);
            r.promise_checked = options.verify_promises;
            return r;
        }
        if (name == "st-half") {
            if (options.verify_promises)
                verify_class(inst, Promise::ST_HALF, options.caps);
            IneResult r = solve_st_half(inst, options.certify, options.caps);
            r.promise_checked = r.promise_checked || options.verify_promises;
            return r;
        }
        if (name == "dd0") return solve_dd0(inst, options.caps);
        if (name == "commutative") return run_commutative_dfa(inst, options);
        if (name == "commutative-nfa") return run_commutative_nfa(inst, options);
        if (name == "tsf") return run_tsf(inst, options);
        if (name == "ponfa-bounded") return run_ponfa_bounded(inst, options);
        if (name == "monoid") return solve_via_monoid(inst, options.caps);
        if (name == "oracle") return run_oracle(inst, options);
        throw std::invalid_argument("unknown strategy: " + name);
    }

    auto all_po = [&] {
        return std::all_of(inst.automata.begin(), inst.automata.end(),
                           [](const Automaton& a) { return is_partially_ordered(a); });
    };
    auto all_po_or_dfa = [&] {
        return std::all_of(inst.automata.begin(), inst.automata.end(), [](const Automaton& a) {
            return is_partially_ordered(a) || a.deterministic_total();
        });
    };

    switch (inst.promise) {
    case Promise::ST0: {
        if (options.verify_promises)
            verify_class(inst, Promise::ST0, options.caps);
        IneResult r = solve_st0(inst);
        r.promise_checked = options.verify_promises;
        return r;
    }
    case Promise::ST_HALF: {
        if (options.verify_promises)
            verify_class(inst, Promise::ST_HALF, options.caps);
        IneResult r = solve_st_half(inst, options.certify, options.caps);
        r.promise_checked = r.promise_checked || options.verify_promises;
        return r;
    }
    case Promise::DD0:
        return solve_dd0(inst, options.caps);
    case Promise::COMMUTATIVE:
        return run_commutative_nfa(inst, options);
    case Promise::COMMUTATIVE_SF: {
        bool all_dfa = std::all_of(inst.automata.begin(), inst.automata.end(),
                                   [](const Automaton& a) { return a.deterministic_total(); });
        return all_dfa ? run_commutative_dfa(inst, options) : run_tsf(inst, options);
    }
    case Promise::ST1:
    case Promise::ST32: {
        if (options.verify_promises && inst.promise == Promise::ST1)
            verify_class(inst, Promise::ST1, options.caps);
        if (all_po_or_dfa()) {
            IneResult r = run_ponfa_bounded(inst, options);
            r.promise_checked = options.verify_promises && inst.promise == Promise::ST1;
            return r;
        }
        // NFAs without usable structure: the depth bound does not apply,
        // fall back to the generic oracle.
        return run_oracle(inst, options, "generic");
    }
    case Promise::NONE:
        break;
    }

    // No promise: classify and pick the cheapest sound strategy.
    std::vector<ClassReport> reports;
    reports.reserve(inst.automata.size());
    for (const Automaton& a : inst.automata)
        reports.push_back(classify(a, options.caps));

    auto all = [&](auto pred) { return std::all_of(reports.begin(), reports.end(), pred); };
    if (all([](const ClassReport& r) { return r.suggested_level == SuggestedLevel::ST0; })) {
        IneResult r = solve_st0(inst);
        r.promise_checked = true;
        return r;
    }
    if (all([](const ClassReport& r) { return r.shuffle_ideal; })) {
        IneResult r = solve_st_half(inst, options.certify, options.caps);
        r.promise_checked = true;
        return r;
    }
    if (all([](const ClassReport& r) { return r.finite || r.cofinite; }))
        return solve_dd0(inst, options.caps);
    if (all([](const ClassReport& r) { return r.commutative; })) {
        bool star_free = all([](const ClassReport& r) { return r.aperiodic == true; });
        SolveOptions no_reverify = options;
        no_reverify.verify_promises = false; // classify already established it
        IneResult r;
        if (star_free && std::all_of(inst.automata.begin(), inst.automata.end(),
                                     [](const Automaton& a) { return a.deterministic_total(); }))
            r = run_commutative_dfa(inst, no_reverify);
        else
            r = run_commutative_nfa(inst, no_reverify);
        r.promise_checked = true;
        return r;
    }
    if (all_po()) {
        // Partially ordered automata are structurally st-3/2.
        IneResult r = run_ponfa_bounded(inst, options);
        r.promise_checked = true;
        return r;
    }
    return run_oracle(inst, options);
}

} // namespace subreg
