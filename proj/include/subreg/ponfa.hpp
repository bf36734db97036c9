#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

/// One residual-equivalence merge applied to a poNFA. In the comparable
/// case the outgoing transitions of the lower state are removed first.
struct MergeEvent {
    enum class Kind { Incomparable, ComparableStripped };
    Kind kind;
    State first;
    State second;
    State result; // id of the merged state in the post-merge automaton
};

using MergeTrace = std::vector<MergeEvent>;

/// L(_q1 A) == L(_q2 A), decided by determinizing both residual automata
/// and comparing minimal DFAs.
bool residual_equal(const Automaton& a, State q1, State q2,
                    std::size_t cap = default_caps().residual_states);

/// Merge-closure of the two residual-equivalence transformations: merge
/// incomparable residual-equal pairs outright, strip-then-merge comparable
/// ones, until all residual languages are pairwise distinct. Language and
/// the partial-order property are preserved.
std::pair<Automaton, MergeTrace> ponfa_merge_minimize(
    const Automaton& a, std::size_t cap = default_caps().residual_states);

/// Sum over the instance of depth(A_i) for partially ordered automata and
/// |Q_i| for total DFAs; a witness of a nonempty intersection exists within
/// this length under the half-level promises.
std::size_t witness_bound(std::span<const Automaton> list);

/// Product BFS truncated at witness_bound; the absent answer is a correct
/// "empty" verdict only under the promise backing the bound.
std::optional<Word> bounded_witness_ine(std::span<const Automaton> list,
                                        const Caps& caps = default_caps());

} // namespace subreg
