#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

/// Per-letter saturation bounds N_a plus the overall maximum N.
struct SaturationBounds {
    std::vector<std::uint64_t> per_letter;
    std::uint64_t overall = 1;
};

/// Word in exponent form a_1^{n_1} ... a_m^{n_m}, following the alphabet
/// order.
struct CanonicalWord {
    std::vector<std::uint64_t> exponents; // one entry per letter

    Word to_word() const;
    bool operator==(const CanonicalWord&) const = default;
};

/// Exponent form of an arbitrary word: counts per letter, laid out in
/// alphabet order.
CanonicalWord canonicalize(const Word& w, std::size_t alphabet_size);

/// N_a = max over the automata of the a-orbit size from the initial state.
/// On minimal DFAs of star-free languages this satisfies
/// d(q0, a^{N_a - 1}) = d(q0, a^{N_a}).
SaturationBounds dfa_saturation_bounds(std::span<const DfaView> list);

/// INE for minimal DFAs of commutative star-free languages: grid-test the
/// canonical words with exponents 0..N_a per letter. The commutativity
/// promise is re-checked unless `verify_promise` is cleared.
std::optional<CanonicalWord> commutative_dfa_ine(std::span<const DfaView> list,
                                                 bool verify_promise = true);

/// INE for partially ordered NFAs with commutative languages: subset-state
/// grid testing with exponents bounded by the largest state count.
std::optional<CanonicalWord> commutative_ponfa_ine(std::span<const Automaton> list,
                                                   bool verify_promise = true,
                                                   const Caps& caps = default_caps());

/// INE for arbitrary NFAs with commutative languages: per-letter phase
/// decomposition over boundary state tuples, with each phase solved as a
/// unary INE on semilinear length sets. Witness is a_1^{k_1} ... a_r^{k_r}.
std::optional<Word> commutative_nfa_ine(std::span<const Automaton> list,
                                        bool verify_promise = true,
                                        const Caps& caps = default_caps());

/// INE for totally star-free NFAs with commutative star-free languages:
/// per-restriction star-free thresholds bound the exponent grid.
std::optional<CanonicalWord> totally_star_free_ine(std::span<const Automaton> list,
                                                   bool verify_promise = true,
                                                   const Caps& caps = default_caps());

} // namespace subreg
