#include "subreg/commutative.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subreg/classify.hpp"
#include "subreg/ops.hpp"
#include "subreg/unary.hpp"

namespace subreg {

Word CanonicalWord::to_word() const {
    Word w;
    for (Letter a = 0; a < exponents.size(); ++a)
        w.insert(w.end(), exponents[a], a);
    return w;
}

CanonicalWord canonicalize(const Word& w, std::size_t alphabet_size) {
    CanonicalWord c;
    c.exponents.assign(alphabet_size, 0);
    for (Letter a : w)
        ++c.exponents.at(a);
    return c;
}

namespace {

void check_commutative_language(const Automaton& a, const Caps& caps) {
    if (!classify(a, caps).commutative)
        throw PromiseViolation("input language is not commutative");
}

// Lexicographic odometer over exponent vectors with per-letter bounds
// (inclusive). Calls `test` on each grid point and returns the first hit.
template <typename Test>
std::optional<CanonicalWord> grid_search(const std::vector<std::uint64_t>& bounds, Test test) {
    CanonicalWord point;
    point.exponents.assign(bounds.size(), 0);
    for (;;) {
        if (test(point))
            return point;
        std::size_t pos = bounds.size();
        while (pos > 0) {
            --pos;
            if (point.exponents[pos] < bounds[pos]) {
                ++point.exponents[pos];
                std::fill(point.exponents.begin() + pos + 1, point.exponents.end(), 0);
                break;
            }
            if (pos == 0)
                return std::nullopt;
        }
    }
}

} // namespace

SaturationBounds dfa_saturation_bounds(std::span<const DfaView> list) {
    if (list.empty())
        throw std::invalid_argument("dfa_saturation_bounds: empty list");
    const std::size_t k = list.front().alphabet().size();
    SaturationBounds bounds;
    bounds.per_letter.assign(k, 1);
    for (const DfaView& d : list) {
        for (Letter a = 0; a < k; ++a) {
            // Orbit of the initial state under the a-map.
            std::vector<bool> seen(d.state_count(), false);
            std::uint64_t size = 0;
            for (State q = d.initial(); !seen[q]; q = d.next(q, a)) {
                seen[q] = true;
                ++size;
            }
            bounds.per_letter[a] = std::max(bounds.per_letter[a], size);
        }
    }
    bounds.overall = *std::max_element(bounds.per_letter.begin(), bounds.per_letter.end());
    return bounds;
}

std::optional<CanonicalWord> commutative_dfa_ine(std::span<const DfaView> list,
                                                 bool verify_promise) {
    if (list.empty())
        throw std::invalid_argument("commutative_dfa_ine: empty list");
    const Alphabet& alphabet = list.front().alphabet();
    for (const DfaView& d : list) {
        if (!(d.alphabet() == alphabet))
            throw std::invalid_argument("commutative_dfa_ine: alphabets differ");
        if (minimize(d).state_count() != d.state_count())
            throw std::invalid_argument("commutative_dfa_ine: input DFA is not minimal");
        if (verify_promise && !is_commutative(d))
            throw PromiseViolation("commutative_dfa_ine: letter maps do not commute");
    }

    const SaturationBounds bounds = dfa_saturation_bounds(list);
    if (verify_promise) {
        // The saturation equation d(q0, a^{N_a-1}) = d(q0, a^{N_a}) fails
        // exactly when some letter orbit cycles, i.e. the language is not
        // star-free on that letter.
        for (const DfaView& d : list) {
            for (Letter a = 0; a < alphabet.size(); ++a) {
                State q = d.initial();
                for (std::uint64_t i = 0; i + 1 < bounds.per_letter[a]; ++i)
                    q = d.next(q, a);
                if (d.next(q, a) != q)
                    throw PromiseViolation(
                        "commutative_dfa_ine: letter orbit does not saturate (not star-free)");
            }
        }
    }
    return grid_search(bounds.per_letter, [&](const CanonicalWord& point) {
        for (const DfaView& d : list) {
            State q = d.initial();
            for (Letter a = 0; a < point.exponents.size(); ++a)
                for (std::uint64_t i = 0; i < point.exponents[a]; ++i)
                    q = d.next(q, a);
            if (!d.is_final(q))
                return false;
        }
        return true;
    });
}

std::optional<CanonicalWord> commutative_ponfa_ine(std::span<const Automaton> list,
                                                   bool verify_promise, const Caps& caps) {
    if (list.empty())
        throw std::invalid_argument("commutative_ponfa_ine: empty list");
    const Alphabet& alphabet = list.front().alphabet();
    std::uint64_t bound = 1;
    for (const Automaton& a : list) {
        if (!(a.alphabet() == alphabet))
            throw std::invalid_argument("commutative_ponfa_ine: alphabets differ");
        if (!is_partially_ordered(a))
            throw std::invalid_argument("commutative_ponfa_ine: automaton is not partially ordered");
        if (verify_promise)
            check_commutative_language(a, caps);
        bound = std::max(bound, static_cast<std::uint64_t>(a.state_count()));
    }

    std::vector<std::uint64_t> bounds(alphabet.size(), bound);
    return grid_search(bounds, [&](const CanonicalWord& point) {
        Word w = point.to_word();
        return std::all_of(list.begin(), list.end(),
                           [&](const Automaton& a) { return accepts(a, w); });
    });
}

namespace {

// Length sets of the unary restrictions B_{i,j,q,p}: the subset walk from
// {q} under letter j is shared across all target states p.
struct RestrictionLengths {
    // tail_sets[pos] / cycle_sets[pos]: set of states reachable from {q}
    // by reading a_j^len, as a bitmask-free sorted vector.
    std::vector<std::vector<State>> tail_sets;
    std::vector<std::vector<State>> cycle_sets;

    SemilinearSet lengths_to(State p) const {
        std::vector<std::uint64_t> finite;
        for (std::size_t i = 0; i < tail_sets.size(); ++i)
            if (std::binary_search(tail_sets[i].begin(), tail_sets[i].end(), p))
                finite.push_back(i);
        std::vector<Progression> progs;
        for (std::size_t i = 0; i < cycle_sets.size(); ++i)
            if (std::binary_search(cycle_sets[i].begin(), cycle_sets[i].end(), p))
                progs.emplace_back(tail_sets.size() + i, cycle_sets.size());
        return SemilinearSet::of(std::move(finite), std::move(progs));
    }
};

RestrictionLengths restriction_walk(const Automaton& a, Letter j, State q) {
    std::map<std::vector<State>, std::size_t> first_seen;
    std::vector<std::vector<State>> sets;
    std::vector<State> cur{q};
    for (;;) {
        auto it = first_seen.find(cur);
        if (it != first_seen.end()) {
            RestrictionLengths out;
            out.tail_sets.assign(sets.begin(), sets.begin() + it->second);
            out.cycle_sets.assign(sets.begin() + it->second, sets.end());
            return out;
        }
        first_seen.emplace(cur, sets.size());
        sets.push_back(cur);
        std::vector<bool> mark(a.state_count(), false);
        for (State s : cur)
            for (State to : a.successors(s, j))
                mark[to] = true;
        cur.clear();
        for (State s = 0; s < a.state_count(); ++s)
            if (mark[s])
                cur.push_back(s);
    }
}

} // namespace

std::optional<Word> commutative_nfa_ine(std::span<const Automaton> list, bool verify_promise,
                                        const Caps& caps) {
    if (list.empty())
        throw std::invalid_argument("commutative_nfa_ine: empty list");
    const Alphabet& alphabet = list.front().alphabet();
    const std::size_t m = list.size();
    const std::size_t r = alphabet.size();
    for (const Automaton& a : list) {
        a.validate();
        if (!(a.alphabet() == alphabet))
            throw std::invalid_argument("commutative_nfa_ine: alphabets differ");
        if (verify_promise)
            check_commutative_language(a, caps);
    }

    std::size_t tuple_count = 1;
    for (const Automaton& a : list) {
        if (tuple_count > caps.tuple_combinations / a.state_count())
            throw CapExceeded("commutative_nfa_ine: boundary tuple cap exceeded");
        tuple_count *= a.state_count();
    }

    // lengths[i][j][q] covers every target state at once.
    std::vector<std::vector<std::vector<RestrictionLengths>>> lengths(m);
    for (std::size_t i = 0; i < m; ++i) {
        lengths[i].resize(r);
        for (Letter j = 0; j < r; ++j) {
            lengths[i][j].reserve(list[i].state_count());
            for (State q = 0; q < list[i].state_count(); ++q)
                lengths[i][j].push_back(restriction_walk(list[i], j, q));
        }
    }

    auto decode = [&](std::size_t id) {
        std::vector<State> tuple(m);
        for (std::size_t i = m; i-- > 0;) {
            tuple[i] = static_cast<State>(id % list[i].state_count());
            id /= list[i].state_count();
        }
        return tuple;
    };

    // Phase DP over boundary tuples: after phase j, `reach` holds for each
    // tuple the chosen predecessor and phase length.
    struct Entry {
        std::size_t pred;
        std::uint64_t len;
    };
    std::vector<std::optional<Entry>> reach(tuple_count);
    for (std::size_t id = 0; id < tuple_count; ++id) {
        auto tuple = decode(id);
        bool initial = true;
        for (std::size_t i = 0; i < m && initial; ++i)
            initial = list[i].is_initial(tuple[i]);
        if (initial)
            reach[id] = Entry{id, 0};
    }

    std::vector<std::vector<std::optional<Entry>>> phases;
    phases.push_back(reach);
    for (Letter j = 0; j < r; ++j) {
        std::vector<std::optional<Entry>> next(tuple_count);
        for (std::size_t from = 0; from < tuple_count; ++from) {
            if (!phases.back()[from])
                continue;
            auto from_tuple = decode(from);
            // Candidate boundary states per automaton: anything the unary
            // restriction can reach at all.
            std::vector<std::vector<State>> cand(m);
            for (std::size_t i = 0; i < m; ++i) {
                const RestrictionLengths& walk = lengths[i][j][from_tuple[i]];
                std::vector<bool> seen(list[i].state_count(), false);
                for (const auto& sets : {walk.tail_sets, walk.cycle_sets})
                    for (const auto& set : sets)
                        for (State p : set)
                            seen[p] = true;
                for (State p = 0; p < list[i].state_count(); ++p)
                    if (seen[p])
                        cand[i].push_back(p);
            }

            // Depth-first over target tuples, intersecting the per-phase
            // unary length sets and abandoning empty prefixes early.
            std::vector<State> target(m);
            auto descend = [&](auto&& self, std::size_t i,
                               const SemilinearSet& common) -> void {
                if (common.empty())
                    return;
                if (i == m) {
                    auto k = common.smallest();
                    std::size_t to = 0;
                    for (std::size_t idx = 0; idx < m; ++idx)
                        to = to * list[idx].state_count() + target[idx];
                    if (!next[to] || *k < next[to]->len ||
                        (*k == next[to]->len && from < next[to]->pred))
                        next[to] = Entry{from, *k};
                    return;
                }
                for (State p : cand[i]) {
                    target[i] = p;
                    self(self, i + 1,
                         semilinear_intersect(common,
                                              lengths[i][j][from_tuple[i]].lengths_to(p)));
                }
            };
            SemilinearSet everything = SemilinearSet::of({}, {Progression(0, 1)});
            descend(descend, 0, everything);
        }
        phases.push_back(std::move(next));
    }

    // Pick the first accepting final tuple and reconstruct the phase lengths.
    for (std::size_t id = 0; id < tuple_count; ++id) {
        if (!phases[r][id])
            continue;
        auto tuple = decode(id);
        bool accepting = true;
        for (std::size_t i = 0; i < m && accepting; ++i)
            accepting = list[i].is_final(tuple[i]);
        if (!accepting)
            continue;
        std::vector<std::uint64_t> ks(r);
        std::size_t cur = id;
        for (Letter j = r; j-- > 0;) {
            ks[j] = phases[j + 1][cur]->len;
            cur = phases[j + 1][cur]->pred;
        }
        Word w;
        for (Letter j = 0; j < r; ++j)
            w.insert(w.end(), ks[j], j);
        return w;
    }
    return std::nullopt;
}

std::optional<CanonicalWord> totally_star_free_ine(std::span<const Automaton> list,
                                                   bool verify_promise, const Caps& caps) {
    if (list.empty())
        throw std::invalid_argument("totally_star_free_ine: empty list");
    const Alphabet& alphabet = list.front().alphabet();
    for (const Automaton& a : list) {
        a.validate();
        if (!(a.alphabet() == alphabet))
            throw std::invalid_argument("totally_star_free_ine: alphabets differ");
        if (verify_promise)
            check_commutative_language(a, caps);
    }

    // Star-free threshold of every unary restriction B_{i,j,q,p}; the walk
    // from q is shared across targets p.
    std::uint64_t bound = 0;
    for (const Automaton& a : list) {
        for (Letter j = 0; j < alphabet.size(); ++j) {
            for (State q = 0; q < a.state_count(); ++q) {
                RestrictionLengths walk = restriction_walk(a, j, q);
                for (State p = 0; p < a.state_count(); ++p) {
                    const bool consensus =
                        std::binary_search(walk.cycle_sets.front().begin(),
                                           walk.cycle_sets.front().end(), p);
                    for (const auto& set : walk.cycle_sets)
                        if (std::binary_search(set.begin(), set.end(), p) != consensus)
                            throw PromiseViolation(
                                "totally_star_free_ine: a state-pair restriction is not star-free");
                    std::uint64_t n = walk.tail_sets.size();
                    while (n > 0 && std::binary_search(walk.tail_sets[n - 1].begin(),
                                                       walk.tail_sets[n - 1].end(),
                                                       p) == consensus)
                        --n;
                    bound = std::max(bound, n);
                }
            }
        }
    }

    std::vector<std::uint64_t> bounds(alphabet.size(), bound);
    return grid_search(bounds, [&](const CanonicalWord& point) {
        Word w = point.to_word();
        return std::all_of(list.begin(), list.end(),
                           [&](const Automaton& a) { return accepts(a, w); });
    });
}

} // namespace subreg
