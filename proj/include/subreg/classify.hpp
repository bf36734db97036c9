#pragma once

#include <optional>
#include <string>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

enum class SuggestedLevel { ST0, ST_HALF, DD0, ST1_PT, UNKNOWN };

std::string to_string(SuggestedLevel level);

/// Structural flags of a language, computed on the minimal DFA.
struct ClassReport {
    bool partially_ordered = false;
    bool confluent = false;
    bool commutative = false;
    bool finite = false;
    bool cofinite = false;
    std::optional<bool> aperiodic; // absent when the monoid cap was exceeded
    bool shuffle_ideal = false;
    bool piecewise_testable = false;
    SuggestedLevel suggested_level = SuggestedLevel::UNKNOWN;
};

/// True iff the reachability preorder is antisymmetric: every strongly
/// connected component is a single state (self-loops allowed).
bool is_partially_ordered(const Automaton& a);

/// Longest path, self-loops excluded, from any initial state, measured in
/// transitions. Throws std::invalid_argument unless partially ordered.
std::size_t depth(const Automaton& a);

/// For every state q and letter pair (a, b): the pair (d(q,a), d(q,b)) can
/// reach the diagonal in the self-product restricted to the letters {a, b}.
bool is_confluent(const DfaView& d);

/// Pointwise commutation of letter maps: d(q, ab) = d(q, ba) for all q, a, b.
/// Requires a minimal DFA (letters generate the transition monoid there, so
/// pairwise commutation is necessary and sufficient); throws otherwise.
bool is_commutative(const DfaView& d);

/// Transition-monoid enumeration; aperiodic iff every element m satisfies
/// m^{k+1} = m^k for some k. Returns nullopt when the monoid exceeds `cap`.
std::optional<bool> is_aperiodic(const DfaView& d,
                                 std::size_t cap = default_caps().monoid_elements);

/// L is a shuffle ideal iff (L shuffled with Sigma*) stays inside L:
/// tested by product emptiness against the complement.
bool is_shuffle_ideal(const DfaView& d);

/// Minimal DFA confluent and partially ordered.
bool is_piecewise_testable(const DfaView& d);

ClassReport classify(const Automaton& a, const Caps& caps = default_caps());

} // namespace subreg
