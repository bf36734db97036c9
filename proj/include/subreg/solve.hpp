#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

/// Promised language class of every automaton in an instance.
enum class Promise { ST0, ST_HALF, DD0, ST1, ST32, COMMUTATIVE, COMMUTATIVE_SF, NONE };

std::string to_string(Promise p);
std::optional<Promise> promise_from_string(const std::string& s);

struct IneInstance {
    std::vector<Automaton> automata;
    Promise promise = Promise::NONE;

    /// Throws unless the list is nonempty and shares one alphabet.
    void validate() const;
};

struct IneResult {
    bool nonempty = false;
    std::optional<Word> witness;
    std::string strategy_used;
    bool promise_checked = false;
};

struct SolveOptions {
    bool certify = false;          // extra in-solver certification (st-1/2 probe)
    bool verify_promises = true;   // re-check promises before trusting them
    std::optional<std::string> strategy; // force a strategy by name
    Caps caps = default_caps();
};

/// Level st-0: every language is {} or Sigma*, so the intersection is
/// nonempty iff every automaton accepts the empty word.
IneResult solve_st0(const IneInstance& inst);

/// Level st-1/2 (shuffle ideals): nonempty iff each automaton individually
/// nonempty; witness is the concatenation of per-automaton shortest words.
/// With `certify`, additionally checks the (a_1...a_k)^{l_i} membership
/// probes and throws PromiseViolation on failure.
IneResult solve_st_half(const IneInstance& inst, bool certify = false,
                        const Caps& caps = default_caps());

/// Level dd-0 (finite or cofinite languages).
IneResult solve_dd0(const IneInstance& inst, const Caps& caps = default_caps());

/// Transformation-monoid route for DFAs: closure of the joint letter action
/// on the disjoint union of the state sets, looking for an element mapping
/// every initial state into its automaton's final set.
IneResult solve_via_monoid(const IneInstance& inst, const Caps& caps = default_caps());

/// Promise-directed dispatcher. Promise violations surface as
/// PromiseViolation, resource blowups as CapExceeded.
IneResult solve(const IneInstance& inst, const SolveOptions& options = {});

/// Strategy names accepted by SolveOptions::strategy and the CLI.
const std::vector<std::string>& strategy_names();

} // namespace subreg
