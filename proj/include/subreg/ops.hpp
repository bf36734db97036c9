#pragma once

#include <optional>
#include <span>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

/// Subset construction. The result is total and deterministic (a sink is
/// added when some subset has no successor). Throws CapExceeded when more
/// than `state_cap` subset states are materialized.
DfaView determinize(const Automaton& a, std::size_t state_cap = default_caps().determinize_states);

/// Unique minimal total DFA (up to isomorphism); unreachable states are
/// removed first. States come out in BFS order from the initial state, so
/// two minimal DFAs of the same language have identical tables.
DfaView minimize(const DfaView& d);

/// Finals flipped: accepts exactly the complement language.
DfaView complement(const DfaView& d);

/// Product automaton whose language is the intersection. States are tuples
/// of per-automaton subset states, so the result is deterministic and total.
Automaton product(std::span<const Automaton> list,
                  std::size_t state_cap = default_caps().product_states);

/// Length-minimal accepted word, lexicographically least under the alphabet
/// order among equal-length candidates; nullopt if the language is empty.
std::optional<Word> shortest_word(const Automaton& a,
                                  std::size_t state_cap = default_caps().product_states);

/// Reference INE decision procedure: shortest witness of the intersection
/// via on-the-fly product BFS (tuples of subset states), or nullopt.
/// `max_len`, when set, truncates the search at that word length.
std::optional<Word> ine_oracle(std::span<const Automaton> list,
                               std::size_t state_cap = default_caps().product_states,
                               std::optional<std::size_t> max_len = std::nullopt);

/// Finiteness of the language: no cycle on any initial-to-final path.
bool is_finite(const Automaton& a);

/// Length of the longest accepted word of a finite language; nullopt when
/// the language is empty. Throws std::invalid_argument on infinite input.
std::optional<std::size_t> longest_word_length(const Automaton& a);

/// Determinize, complement, test finiteness.
bool is_cofinite(const Automaton& a, std::size_t state_cap = default_caps().determinize_states);

/// Longest word missing from a cofinite language; nullopt when the
/// complement is empty (language is Sigma*). Throws on non-cofinite input.
std::optional<std::size_t> complement_longest_word(
    const Automaton& a, std::size_t state_cap = default_caps().determinize_states);

/// Canonical fingerprint of a minimal DFA: BFS-ordered transition table
/// plus finals. Equal keys <=> isomorphic minimal DFAs <=> equal languages.
std::vector<std::int64_t> canonical_key(const DfaView& minimal);

/// Language equality through minimal-DFA isomorphism.
bool equivalent(const Automaton& a, const Automaton& b,
                std::size_t state_cap = default_caps().determinize_states);

} // namespace subreg
