#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subreg/automaton.hpp"
#include "subreg/base.hpp"

namespace subreg {

/// Arithmetic progression {offset + period * k : k >= 0} with period >= 1.
struct Progression {
    std::uint64_t offset = 0;
    std::uint64_t period = 1;

    Progression(std::uint64_t t, std::uint64_t p);
    bool contains(std::uint64_t n) const {
        return n >= offset && (n - offset) % period == 0;
    }
    bool operator==(const Progression&) const = default;
    auto operator<=>(const Progression&) const = default;
};

/// Finite exception set plus arithmetic progressions; the canonical form of
/// unary regular length-sets. finite_part entries are sorted and never
/// already covered by a progression.
struct SemilinearSet {
    std::vector<std::uint64_t> finite_part;
    std::vector<Progression> progressions;

    static SemilinearSet of(std::vector<std::uint64_t> finite, std::vector<Progression> progs);
    bool empty() const { return finite_part.empty() && progressions.empty(); }
    std::optional<std::uint64_t> smallest() const;
};

bool semilinear_member(const SemilinearSet& s, std::uint64_t n);
SemilinearSet semilinear_intersect(const SemilinearSet& x, const SemilinearSet& y);

/// Shape of a deterministic unary automaton: accept bits along the initial
/// tail (lengths 0..T-1) followed by accept bits around the single cycle.
struct TailCycle {
    std::vector<bool> tail_accept;
    std::vector<bool> cycle_accept; // nonempty
    // Set when the tail came out longer than state_count^2; the expected
    // normal-form tail bound is quadratic.
    bool tail_exceeds_quadratic_bound = false;
};

/// Subset construction of a unary NFA read off as tail + cycle.
TailCycle to_tail_cycle(const Automaton& a,
                        std::size_t state_cap = default_caps().determinize_states);

/// Exact length-set of a unary language: finite part from accepting tail
/// positions, one progression per accepting cycle position.
SemilinearSet unary_lengths(const Automaton& a,
                            std::size_t state_cap = default_caps().determinize_states);

/// Smallest N such that membership of a^N determines membership of every
/// a^{N+k}. nullopt when the cycle bits are mixed (language not star-free).
std::optional<std::uint64_t> star_free_threshold(
    const Automaton& a, std::size_t state_cap = default_caps().determinize_states);

/// Eventual-coverage threshold of X = extras + union of progressions: when X
/// is cofinite, returns T_max = max progression offset (every integer from
/// T_max on is covered); otherwise nullopt. `probe` is where the verifying
/// scan of X starts; coverage itself is decided exactly per residue class.
std::optional<std::uint64_t> progression_threshold(std::span<const Progression> progs,
                                                   std::span<const std::uint64_t> extras,
                                                   std::uint64_t probe);

/// Smallest common accepted length of unary automata over the same letter.
std::optional<std::uint64_t> unary_ine(std::span<const Automaton> list,
                                       std::size_t state_cap = default_caps().determinize_states);

} // namespace subreg
