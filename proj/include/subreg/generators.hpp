#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"
#include "subreg/solve.hpp"

namespace subreg {

struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    void validate() const;
};

/// CNF clause set; literals are signed 1-based variable indices.
struct CnfFormula {
    std::size_t variable_count = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const;
};

/// Finite set Q with generator maps and a target map.
struct TransformationSystem {
    std::size_t domain_size = 0;
    std::vector<std::vector<State>> generators;
    std::vector<State> target;

    void validate() const;
};

/// 2-GAP reduction: unary NFA with a self-loop on every state and an edge
/// per graph arc; nonempty iff t is reachable from s. Edges must be ordered
/// (i < j). The language is a shuffle ideal.
Automaton gap2_to_nfa(const Graph& g, std::size_t s, std::size_t t);

/// 1-GAP reduction: unary DFA (outdegree at most one, completed with a
/// sink); the language is empty or "all words of length >= l".
DfaView gap1_to_dfa(const Graph& g, std::size_t s, std::size_t t);

/// Vertex-Cover reduction: one two-chain DFA per edge plus the (n,k)-grid
/// DFA accepting length-n words with at most k ones. The intersection is
/// nonempty iff the graph has a vertex cover of size <= k.
IneInstance vertex_cover_to_ine(const Graph& g, std::size_t k);

/// 3-CNF-SAT reduction over the alphabet {x_1..x_n, ~x_1..~x_n}: a clause
/// DFA per clause (some literal occurs) and a consistency DFA per variable
/// (never both polarities). All gadget languages are commutative.
IneInstance sat_to_commutative_ine(const CnfFormula& f);

/// Zimin word u_j over {1..j}: u_1 = 1, u_j = u_{j-1} j u_{j-1}.
Word zimin(std::size_t j);
Alphabet digit_alphabet(std::size_t n);

/// Words with two occurrences of some letter i enclosing only letters
/// smaller than i. Letters are 0-based indices (value = index + 1).
bool in_m_double_prime(const Word& w, std::size_t n);
/// Odd length or the repeat pattern above.
bool in_m(const Word& w, std::size_t n);
/// Binary-encoded family: improper encodings plus encodings of M_n words.
bool in_l(const Word& w, std::size_t n);

/// Block encoding i -> a^i b^{n-i}, applied letterwise.
Word phi_encode(const Word& w, std::size_t n);

/// NFA for M''_n with n + 2 states (hub, one guess state per letter,
/// accepting sink).
Automaton mpp_nfa(std::size_t n);
/// NFA for M_n = M'_n + M''_n with exactly n + 4 states.
Automaton m_nfa(std::size_t n);
/// NFA for L_n over {a, b} with at most n(2n + 5) states.
Automaton l_nfa(std::size_t n);

struct SeparationReport {
    std::size_t n = 0;
    std::size_t zimin_length = 0;
    std::size_t ones_count = 0;
    std::size_t ponfa_lower_bound = 0; // minimal poNFA needs more than 2^{n-1} states
};

/// Verifies the separation ingredients: |u_n| = 2^n - 1, #1(u_n) = 2^{n-1},
/// u_n accepted by m_nfa(n), and every single-1-deletion rejected. Throws
/// std::logic_error when any check fails.
SeparationReport separation_report(std::size_t n);

/// One DFA per element of Q over the generator alphabet, initial q, final
/// t(q); the intersection is nonempty iff t lies in the generated monoid
/// (the identity counts, matching the empty witness).
IneInstance monoid_to_ine(const TransformationSystem& ts);

/// Closure enumeration oracle for the reduction above.
bool monoid_membership(const TransformationSystem& ts,
                       std::size_t cap = default_caps().monoid_elements);

/// Line-based input formats for the CLI.
Graph parse_graph(const std::string& text);
CnfFormula parse_cnf(const std::string& text); // DIMACS
TransformationSystem parse_transformation_system(const std::string& text);

} // namespace subreg
