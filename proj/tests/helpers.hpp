#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/classify.hpp"
#include "subreg/generators.hpp"
#include "subreg/ops.hpp"

namespace subreg::testing {

inline Automaton make(const std::string& letters, std::size_t states,
                      std::initializer_list<State> initials, std::initializer_list<State> finals,
                      std::initializer_list<std::tuple<State, char, State>> transitions) {
    Automaton a(Alphabet::of_chars(letters), states);
    for (State q : initials)
        a.set_initial(q);
    for (State q : finals)
        a.set_final(q);
    for (auto [from, c, to] : transitions)
        a.add_transition(from, *a.alphabet().find(std::string(1, c)), to);
    return a;
}

inline Word w(const Automaton& a, const std::string& chars) {
    Word out;
    for (char c : chars)
        out.push_back(*a.alphabet().find(std::string(1, c)));
    return out;
}

inline std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter x = 0; x < alphabet_size; ++x) {
                Word next = out[i];
                next.push_back(x);
                out.push_back(std::move(next));
            }
        level_begin = level_end;
    }
    return out;
}

// --- random families ---------------------------------------------------

inline Automaton random_nfa(std::mt19937& rng, std::size_t max_states, std::size_t letters,
                            double density = 0.25) {
    std::uniform_int_distribution<std::size_t> state_count(1, max_states);
    const std::size_t n = state_count(rng);
    Automaton a(Alphabet::of_chars(std::string("abc").substr(0, letters)), n);
    std::bernoulli_distribution edge(density), flag(0.4);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < letters; ++x)
            for (State to = 0; to < n; ++to)
                if (edge(rng))
                    a.add_transition(q, x, to);
    for (State q = 0; q < n; ++q) {
        if (flag(rng))
            a.set_initial(q);
        if (flag(rng))
            a.set_final(q);
    }
    if (a.initials().empty())
        a.set_initial(static_cast<State>(rng() % n));
    return a;
}

inline DfaView random_dfa(std::mt19937& rng, std::size_t max_states, std::size_t letters) {
    std::uniform_int_distribution<std::size_t> state_count(1, max_states);
    const std::size_t n = state_count(rng);
    Automaton a(Alphabet::of_chars(std::string("abc").substr(0, letters)), n);
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::bernoulli_distribution flag(0.4);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < letters; ++x)
            a.add_transition(q, x, pick(rng));
    a.set_initial(pick(rng));
    for (State q = 0; q < n; ++q)
        if (flag(rng))
            a.set_final(q);
    return DfaView(std::move(a));
}

/// DAG edges plus optional self-loops: always partially ordered.
inline Automaton random_ponfa(std::mt19937& rng, std::size_t max_states, std::size_t letters,
                              double density = 0.3) {
    std::uniform_int_distribution<std::size_t> state_count(1, max_states);
    const std::size_t n = state_count(rng);
    Automaton a(Alphabet::of_chars(std::string("abc").substr(0, letters)), n);
    std::bernoulli_distribution edge(density), loop(0.25), flag(0.4);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < letters; ++x) {
            for (State to = q + 1; to < n; ++to)
                if (edge(rng))
                    a.add_transition(q, x, to);
            if (loop(rng))
                a.add_transition(q, x, q);
        }
    for (State q = 0; q < n; ++q) {
        if (flag(rng))
            a.set_initial(q);
        if (flag(rng))
            a.set_final(q);
    }
    if (a.initials().empty())
        a.set_initial(0);
    return a;
}

/// Universal self-loops make any language upward closed.
inline Automaton random_shuffle_ideal_nfa(std::mt19937& rng, std::size_t max_states,
                                          std::size_t letters) {
    Automaton a = random_nfa(rng, max_states, letters);
    for (State q = 0; q < a.state_count(); ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            a.add_transition(q, x, q);
    return a;
}

inline Automaton random_unary_nfa(std::mt19937& rng, std::size_t max_states) {
    return random_nfa(rng, max_states, 1, 0.35);
}

/// Product of per-letter counters with random finals; the letter maps
/// commute pointwise, so the language is commutative. Star-free counters
/// saturate at their cap, group-flavored ones count modulo the cap.
inline DfaView random_commutative_dfa(std::mt19937& rng, std::size_t letters, bool star_free,
                                      std::size_t max_states = 6) {
    std::vector<std::size_t> caps;
    std::size_t total = 1;
    for (std::size_t i = 0; i < letters; ++i) {
        std::uniform_int_distribution<std::size_t> cap(1, 3);
        std::size_t c = cap(rng);
        while (total * c > max_states)
            c = c > 1 ? c - 1 : 1;
        caps.push_back(c);
        total *= c;
    }
    Automaton a(Alphabet::of_chars(std::string("abc").substr(0, letters)), total);
    auto encode = [&](const std::vector<std::size_t>& counts) {
        std::size_t id = 0;
        for (std::size_t i = 0; i < letters; ++i)
            id = id * caps[i] + counts[i];
        return static_cast<State>(id);
    };
    auto decode = [&](std::size_t id) {
        std::vector<std::size_t> counts(letters);
        for (std::size_t i = letters; i-- > 0;) {
            counts[i] = id % caps[i];
            id /= caps[i];
        }
        return counts;
    };
    for (std::size_t id = 0; id < total; ++id) {
        auto counts = decode(id);
        for (Letter x = 0; x < letters; ++x) {
            auto next = counts;
            if (star_free)
                next[x] = std::min(next[x] + 1, caps[x] - 1);
            else
                next[x] = (next[x] + 1) % caps[x];
            a.add_transition(static_cast<State>(id), x, encode(next));
        }
    }
    a.set_initial(0);
    std::bernoulli_distribution flag(0.4);
    bool any = false;
    for (State q = 0; q < total; ++q)
        if (flag(rng)) {
            a.set_final(q);
            any = true;
        }
    if (!any)
        a.set_final(static_cast<State>(rng() % total));
    return DfaView(std::move(a));
}

// --- brute-force oracles ------------------------------------------------

inline bool brute_shuffle_ideal(const Automaton& a, std::size_t max_len) {
    for (const Word& word : all_words(a.alphabet().size(), max_len)) {
        if (!accepts(a, word))
            continue;
        for (std::size_t pos = 0; pos <= word.size(); ++pos)
            for (Letter x = 0; x < a.alphabet().size(); ++x) {
                Word super = word;
                super.insert(super.begin() + pos, x);
                if (!accepts(a, super))
                    return false;
            }
    }
    return true;
}

inline bool brute_commutative(const Automaton& a, std::size_t max_len) {
    for (const Word& word : all_words(a.alphabet().size(), max_len)) {
        for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
            Word swapped = word;
            std::swap(swapped[pos], swapped[pos + 1]);
            if (accepts(a, word) != accepts(a, swapped))
                return false;
        }
    }
    return true;
}

inline bool brute_aperiodic(const DfaView& d) {
    // No word of length <= |Q| may put a state on a cycle of length > 1.
    const std::size_t n = d.state_count();
    for (const Word& word : all_words(d.alphabet().size(), n)) {
        if (word.empty())
            continue;
        for (State q = 0; q < n; ++q) {
            State cur = d.run(q, word);
            if (cur == q)
                continue;
            // Walk the orbit of q under the word map.
            State probe = cur;
            for (std::size_t steps = 0; steps < n; ++steps) {
                probe = d.run(probe, word);
                if (probe == q)
                    return false;
            }
        }
    }
    return true;
}

inline bool brute_vertex_cover(const Graph& g, std::size_t k) {
    const std::size_t n = g.vertex_count;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) > k)
            continue;
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        if (covers)
            return true;
    }
    return false;
}

inline bool brute_sat(const CnfFormula& f) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << f.variable_count); ++mask) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            bool clause_ok = false;
            for (int lit : clause) {
                std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
                bool value = (mask >> var) & 1;
                if (lit > 0 ? value : !value) {
                    clause_ok = true;
                    break;
                }
            }
            if (!clause_ok) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return f.clauses.empty();
}

inline bool graph_reachable(const Graph& g, std::size_t s, std::size_t t) {
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (auto [u, v] : g.edges)
            if (u == q && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen[t];
}

} // namespace subreg::testing
