#include "subreg/ponfa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subreg/classify.hpp"
#include "subreg/ops.hpp"

namespace subreg {

namespace {

std::vector<std::int64_t> residual_key(const Automaton& a, State q, std::size_t cap) {
    return canonical_key(minimize(determinize(a.with_initials({q}), cap)));
}

// reach[p][q]: q reachable from p (reflexive).
std::vector<std::vector<bool>> reachability(const Automaton& a) {
    const std::size_t n = a.state_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (State p = 0; p < n; ++p) {
        std::vector<State> stack{p};
        reach[p][p] = true;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (Letter x = 0; x < a.alphabet().size(); ++x)
                for (State to : a.successors(q, x))
                    if (!reach[p][to]) {
                        reach[p][to] = true;
                        stack.push_back(to);
                    }
        }
    }
    return reach;
}

// Merge q1 and q2 (q1 < q2). The merged state keeps q1's slot; states above
// q2 shift down. When `strip` is set, the out-transitions of `stripped` are
// dropped before the union.
Automaton merge_pair(const Automaton& a, State q1, State q2, bool strip, State stripped) {
    const std::size_t n = a.state_count();
    auto remap = [&](State q) -> State {
        if (q == q2)
            return q1;
        return q > q2 ? q - 1 : q;
    };
    Automaton out(a.alphabet(), n - 1);
    for (State q = 0; q < n; ++q) {
        for (Letter x = 0; x < a.alphabet().size(); ++x) {
            if (strip && q == stripped)
                continue;
            for (State to : a.successors(q, x))
                out.add_transition(remap(q), x, remap(to));
        }
        if (a.is_initial(q))
            out.set_initial(remap(q));
        if (a.is_final(q))
            out.set_final(remap(q));
    }
    return out;
}

} // namespace

bool residual_equal(const Automaton& a, State q1, State q2, std::size_t cap) {
    if (q1 == q2)
        return true;
    return residual_key(a, q1, cap) == residual_key(a, q2, cap);
}

std::pair<Automaton, MergeTrace> ponfa_merge_minimize(const Automaton& a, std::size_t cap) {
    if (!is_partially_ordered(a))
        throw std::invalid_argument("ponfa_merge_minimize: automaton is not partially ordered");
    Automaton cur = a;
    MergeTrace trace;

    for (;;) {
        const std::size_t n = cur.state_count();
        std::vector<std::vector<std::int64_t>> keys;
        keys.reserve(n);
        for (State q = 0; q < n; ++q)
            keys.push_back(residual_key(cur, q, cap));
        auto reach = reachability(cur);

        // Lowest pair first; incomparable merges are preferred over
        // comparable ones.
        std::optional<std::pair<State, State>> incomparable, comparable;
        for (State q1 = 0; q1 < n && !incomparable; ++q1)
            for (State q2 = q1 + 1; q2 < n; ++q2) {
                if (keys[q1] != keys[q2])
                    continue;
                if (!reach[q1][q2] && !reach[q2][q1]) {
                    incomparable = {q1, q2};
                    break;
                }
                if (!comparable)
                    comparable = {q1, q2};
            }

        if (incomparable) {
            auto [q1, q2] = *incomparable;
            cur = merge_pair(cur, q1, q2, false, 0);
            trace.push_back({MergeEvent::Kind::Incomparable, q1, q2, q1});
        } else if (comparable) {
            auto [q1, q2] = *comparable;
            // Strip the state the other one is reachable from.
            State stripped = reach[q1][q2] ? q1 : q2;
            cur = merge_pair(cur, q1, q2, true, stripped);
            trace.push_back({MergeEvent::Kind::ComparableStripped, q1, q2, q1});
        } else {
            break;
        }
    }
    return {std::move(cur), std::move(trace)};
}

std::size_t witness_bound(std::span<const Automaton> list) {
    std::size_t bound = 0;
    for (const Automaton& a : list) {
        if (is_partially_ordered(a))
            bound += depth(a);
        else if (a.deterministic_total())
            bound += a.state_count();
        else
            throw std::invalid_argument(
                "witness_bound: automaton is neither partially ordered nor a DFA");
    }
    return bound;
}

std::optional<Word> bounded_witness_ine(std::span<const Automaton> list, const Caps& caps) {
    return ine_oracle(list, caps.product_states, witness_bound(list));
}

} // namespace subreg
