#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subreg/base.hpp"

namespace subreg {

/// Ordered alphabet of distinct printable symbols. The order is significant:
/// it fixes a_1 < a_2 < ... < a_k for canonical words and witness tie-breaks.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Convenience: one single-character symbol per char of `letters`.
    static Alphabet of_chars(const std::string& letters);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter a) const { return symbols_.at(a); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Letter> find(const std::string& symbol) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

    /// Renders a word. Symbols are concatenated when all are single
    /// characters, otherwise joined with spaces to stay unambiguous.
    std::string render(const Word& w) const;

private:
    std::vector<std::string> symbols_;
};

/// NFA with a set of initial states and a set of final states, over an
/// ordered alphabet. No epsilon transitions. DFAs are the special case
/// checked by DfaView.
class Automaton {
public:
    Automaton() = default;
    Automaton(Alphabet alphabet, std::size_t state_count);

    std::size_t state_count() const { return state_count_; }
    const Alphabet& alphabet() const { return alphabet_; }

    void add_transition(State from, Letter a, State to);
    void set_initial(State q);
    void set_final(State q);

    const std::vector<State>& successors(State q, Letter a) const;
    bool is_initial(State q) const { return initial_.at(q); }
    bool is_final(State q) const { return final_.at(q); }
    std::vector<State> initials() const;
    std::vector<State> finals() const;
    bool has_final_initial() const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// True when |initials| == 1 and every (state, letter) has exactly one
    /// successor.
    bool deterministic_total() const;

    /// Throws std::invalid_argument unless initials are nonempty and all
    /// indices are in range (the latter holds by construction).
    void validate() const;

    /// Same automaton with initials replaced by {q} (the residual _qA).
    Automaton with_initials(std::vector<State> qs) const;
    /// Same automaton with finals replaced by the given set.
    Automaton with_finals(std::vector<State> qs) const;

    /// Restriction to a single letter: keeps all states, drops every
    /// transition not labeled `a`; the result's alphabet is just {a}.
    Automaton letter_restriction(Letter a) const;

private:
    void check_state(State q) const;

    Alphabet alphabet_;
    std::size_t state_count_ = 0;
    // delta_[q][a] is a sorted vector of successors.
    std::vector<std::vector<std::vector<State>>> delta_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
    std::string name_;
};

/// Total-DFA view over an Automaton: exactly one initial state and exactly
/// one successor per (state, letter). Constructing one from an automaton
/// that is not deterministic and total throws.
class DfaView {
public:
    explicit DfaView(Automaton a);

    State initial() const { return initial_; }
    State next(State q, Letter a) const { return aut_.successors(q, a).front(); }
    State run(State q, const Word& w) const;
    bool is_final(State q) const { return aut_.is_final(q); }
    std::size_t state_count() const { return aut_.state_count(); }
    const Alphabet& alphabet() const { return aut_.alphabet(); }
    const Automaton& automaton() const { return aut_; }

private:
    Automaton aut_;
    State initial_ = 0;
};

/// Subset simulation from the initial states; true iff a final state is
/// reached. Throws std::out_of_range on a letter index out of range.
bool accepts(const Automaton& a, const Word& w);

/// Set of states reachable from `from` by reading `w` (subset step).
std::vector<State> step_all(const Automaton& a, const std::vector<State>& from, const Word& w);

/// Disjoint union: same alphabet required; the language is the union.
Automaton disjoint_union(const Automaton& a, const Automaton& b);

/// Restriction to states that lie on some initial-to-final path. The
/// returned automaton may have zero states (empty language).
Automaton trim(const Automaton& a);

} // namespace subreg
