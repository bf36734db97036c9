#include "subreg/ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace subreg {

namespace {

std::vector<State> subset_step(const Automaton& a, const std::vector<State>& set, Letter x) {
    std::vector<bool> mark(a.state_count(), false);
    for (State q : set)
        for (State to : a.successors(q, x))
            mark[to] = true;
    std::vector<State> out;
    for (State q = 0; q < a.state_count(); ++q)
        if (mark[q])
            out.push_back(q);
    return out;
}

bool intersects_finals(const Automaton& a, const std::vector<State>& set) {
    return std::any_of(set.begin(), set.end(), [&](State q) { return a.is_final(q); });
}

} // namespace

DfaView determinize(const Automaton& a, std::size_t state_cap) {
    a.validate();
    const std::size_t k = a.alphabet().size();
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> subsets;
    std::vector<std::vector<State>> table;

    auto intern = [&](std::vector<State> set) -> State {
        auto it = ids.find(set);
        if (it != ids.end())
            return it->second;
        if (subsets.size() >= state_cap)
            throw CapExceeded("determinize: subset state cap exceeded");
        State id = static_cast<State>(subsets.size());
        ids.emplace(set, id);
        subsets.push_back(std::move(set));
        table.emplace_back(k, 0);
        return id;
    };

    State start = intern(a.initials());
    for (State cur = 0; cur < subsets.size(); ++cur)
        for (Letter x = 0; x < k; ++x) {
            State to = intern(subset_step(a, subsets[cur], x));
            table[cur][x] = to;
        }

    Automaton out(a.alphabet(), subsets.size());
    for (State q = 0; q < subsets.size(); ++q) {
        for (Letter x = 0; x < k; ++x)
            out.add_transition(q, x, table[q][x]);
        if (intersects_finals(a, subsets[q]))
            out.set_final(q);
    }
    out.set_initial(start);
    return DfaView(std::move(out));
}

namespace {

// Restriction of a total DFA to the part reachable from the initial state.
Automaton reachable_part(const DfaView& d) {
    const std::size_t k = d.alphabet().size();
    std::vector<State> order;
    std::vector<State> remap(d.state_count(), 0);
    std::vector<bool> seen(d.state_count(), false);
    std::queue<State> queue;
    queue.push(d.initial());
    seen[d.initial()] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        remap[q] = static_cast<State>(order.size());
        order.push_back(q);
        for (Letter x = 0; x < k; ++x) {
            State to = d.next(q, x);
            if (!seen[to]) {
                seen[to] = true;
                queue.push(to);
            }
        }
    }
    Automaton out(d.alphabet(), order.size());
    for (State q : order) {
        for (Letter x = 0; x < k; ++x)
            out.add_transition(remap[q], x, remap[d.next(q, x)]);
        if (d.is_final(q))
            out.set_final(remap[q]);
    }
    out.set_initial(remap[d.initial()]);
    return out;
}

} // namespace

DfaView minimize(const DfaView& d) {
    DfaView r(reachable_part(d));
    const std::size_t n = r.state_count();
    const std::size_t k = r.alphabet().size();

    // Moore partition refinement from the final/non-final split.
    std::vector<int> cls(n);
    for (State q = 0; q < n; ++q)
        cls[q] = r.is_final(q) ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(n);
        for (State q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[q]);
            for (Letter x = 0; x < k; ++x)
                sig.push_back(cls[r.next(q, x)]);
            auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_cls[q] = it->second;
        }
        bool stable = std::equal(cls.begin(), cls.end(), next_cls.begin());
        cls.swap(next_cls);
        if (stable)
            break;
    }

    const int class_count = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<State> rep(class_count, 0);
    for (State q = n; q-- > 0;)
        rep[cls[q]] = q;

    // BFS renumbering of the quotient for a canonical state order.
    std::vector<int> remap(class_count, -1);
    std::vector<int> order;
    std::queue<int> queue;
    queue.push(cls[r.initial()]);
    remap[cls[r.initial()]] = 0;
    order.push_back(cls[r.initial()]);
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop();
        for (Letter x = 0; x < k; ++x) {
            int to = cls[r.next(rep[c], x)];
            if (remap[to] < 0) {
                remap[to] = static_cast<int>(order.size());
                order.push_back(to);
                queue.push(to);
            }
        }
    }

    Automaton out(r.alphabet(), order.size());
    for (int c : order) {
        State from = static_cast<State>(remap[c]);
        for (Letter x = 0; x < k; ++x)
            out.add_transition(from, x, static_cast<State>(remap[cls[r.next(rep[c], x)]]));
        if (r.is_final(rep[c]))
            out.set_final(from);
    }
    out.set_initial(0);
    return DfaView(std::move(out));
}

DfaView complement(const DfaView& d) {
    std::vector<State> flipped;
    for (State q = 0; q < d.state_count(); ++q)
        if (!d.is_final(q))
            flipped.push_back(q);
    return DfaView(d.automaton().with_finals(std::move(flipped)));
}

namespace {

// Tuple-of-subsets exploration shared by product / oracle / shortest word.
struct TupleSpace {
    explicit TupleSpace(std::span<const Automaton> list) : autos(list) {
        if (autos.empty())
            throw std::invalid_argument("empty automaton list");
        for (const Automaton& a : autos) {
            a.validate();
            if (!(a.alphabet() == autos.front().alphabet()))
                throw std::invalid_argument("automata do not share one alphabet");
        }
    }

    using Key = std::vector<State>; // concatenated per-automaton subsets with separators

    Key key_of(const std::vector<std::vector<State>>& tuple) const {
        Key key;
        for (const auto& set : tuple) {
            key.insert(key.end(), set.begin(), set.end());
            key.push_back(static_cast<State>(-1));
        }
        return key;
    }

    std::vector<std::vector<State>> initial_tuple() const {
        std::vector<std::vector<State>> tuple;
        tuple.reserve(autos.size());
        for (const Automaton& a : autos)
            tuple.push_back(a.initials());
        return tuple;
    }

    std::vector<std::vector<State>> step(const std::vector<std::vector<State>>& tuple,
                                         Letter x) const {
        std::vector<std::vector<State>> out;
        out.reserve(autos.size());
        for (std::size_t i = 0; i < autos.size(); ++i)
            out.push_back(subset_step(autos[i], tuple[i], x));
        return out;
    }

    bool accepting(const std::vector<std::vector<State>>& tuple) const {
        for (std::size_t i = 0; i < autos.size(); ++i)
            if (!intersects_finals(autos[i], tuple[i]))
                return false;
        return true;
    }

    std::span<const Automaton> autos;
};

} // namespace

Automaton product(std::span<const Automaton> list, std::size_t state_cap) {
    TupleSpace space(list);
    const std::size_t k = list.front().alphabet().size();

    std::map<TupleSpace::Key, State> ids;
    std::vector<std::vector<std::vector<State>>> tuples;
    std::vector<std::vector<State>> table;
    std::vector<bool> accepting;

    auto intern = [&](std::vector<std::vector<State>> tuple) -> State {
        auto key = space.key_of(tuple);
        auto it = ids.find(key);
        if (it != ids.end())
            return it->second;
        if (tuples.size() >= state_cap)
            throw CapExceeded("product: state cap exceeded");
        State id = static_cast<State>(tuples.size());
        ids.emplace(std::move(key), id);
        accepting.push_back(space.accepting(tuple));
        tuples.push_back(std::move(tuple));
        table.emplace_back(k, 0);
        return id;
    };

    State start = intern(space.initial_tuple());
    for (State cur = 0; cur < tuples.size(); ++cur)
        for (Letter x = 0; x < k; ++x)
            table[cur][x] = intern(space.step(tuples[cur], x));

    Automaton out(list.front().alphabet(), tuples.size());
    for (State q = 0; q < tuples.size(); ++q) {
        for (Letter x = 0; x < k; ++x)
            out.add_transition(q, x, table[q][x]);
        if (accepting[q])
            out.set_final(q);
    }
    out.set_initial(start);
    return out;
}

std::optional<Word> ine_oracle(std::span<const Automaton> list, std::size_t state_cap,
                               std::optional<std::size_t> max_len) {
    TupleSpace space(list);
    const std::size_t k = list.front().alphabet().size();

    // BFS expanding letters in alphabet order: the first accepting tuple
    // found is reached by the length-minimal, lexicographically least word.
    std::map<TupleSpace::Key, State> ids;
    std::vector<std::vector<std::vector<State>>> tuples;
    std::vector<std::pair<State, Letter>> parent;
    std::vector<std::size_t> depth;

    auto reconstruct = [&](State q) {
        Word w;
        while (depth[q] > 0) {
            w.push_back(parent[q].second);
            q = parent[q].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    auto start_tuple = space.initial_tuple();
    if (space.accepting(start_tuple))
        return Word{};
    ids.emplace(space.key_of(start_tuple), 0);
    tuples.push_back(std::move(start_tuple));
    parent.emplace_back(0, 0);
    depth.push_back(0);

    for (State cur = 0; cur < tuples.size(); ++cur) {
        if (max_len && depth[cur] >= *max_len)
            continue;
        for (Letter x = 0; x < k; ++x) {
            auto next = space.step(tuples[cur], x);
            auto key = space.key_of(next);
            if (ids.contains(key))
                continue;
            if (tuples.size() >= state_cap)
                throw CapExceeded("ine_oracle: state cap exceeded");
            State id = static_cast<State>(tuples.size());
            ids.emplace(std::move(key), id);
            bool hit = space.accepting(next);
            tuples.push_back(std::move(next));
            parent.emplace_back(cur, x);
            depth.push_back(depth[cur] + 1);
            if (hit)
                return reconstruct(id);
        }
    }
    return std::nullopt;
}

std::optional<Word> shortest_word(const Automaton& a, std::size_t state_cap) {
    return ine_oracle(std::span<const Automaton>(&a, 1), state_cap);
}

namespace {

// Cycle detection over the trimmed automaton, self-loops included.
bool has_cycle(const Automaton& t) {
    const std::size_t n = t.state_count();
    enum class Color { White, Gray, Black };
    std::vector<Color> color(n, Color::White);
    std::vector<std::pair<State, std::size_t>> stack;

    auto succ_all = [&](State q) {
        std::vector<State> out;
        for (Letter x = 0; x < t.alphabet().size(); ++x)
            for (State to : t.successors(q, x))
                out.push_back(to);
        return out;
    };

    for (State root = 0; root < n; ++root) {
        if (color[root] != Color::White)
            continue;
        stack.emplace_back(root, 0);
        color[root] = Color::Gray;
        std::vector<std::vector<State>> succs{succ_all(root)};
        while (!stack.empty()) {
            auto& [q, idx] = stack.back();
            if (idx < succs.back().size()) {
                State to = succs.back()[idx++];
                if (color[to] == Color::Gray)
                    return true;
                if (color[to] == Color::White) {
                    color[to] = Color::Gray;
                    stack.emplace_back(to, 0);
                    succs.push_back(succ_all(to));
                }
            } else {
                color[q] = Color::Black;
                stack.pop_back();
                succs.pop_back();
            }
        }
    }
    return false;
}

} // namespace

bool is_finite(const Automaton& a) {
    a.validate();
    return !has_cycle(trim(a));
}

std::optional<std::size_t> longest_word_length(const Automaton& a) {
    Automaton t = trim(a);
    if (t.state_count() == 0)
        return std::nullopt;
    if (has_cycle(t))
        throw std::invalid_argument("longest_word_length: language is infinite");

    // Longest path from an initial state, over the trimmed DAG.
    const std::size_t n = t.state_count();
    std::vector<std::size_t> indeg(n, 0);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < t.alphabet().size(); ++x)
            for (State to : t.successors(q, x))
                ++indeg[to];
    std::vector<State> topo;
    for (State q = 0; q < n; ++q)
        if (indeg[q] == 0)
            topo.push_back(q);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (Letter x = 0; x < t.alphabet().size(); ++x)
            for (State to : t.successors(topo[i], x))
                if (--indeg[to] == 0)
                    topo.push_back(to);

    std::vector<std::int64_t> dist(n, -1);
    for (State q : t.initials())
        dist[q] = 0;
    for (State q : topo) {
        if (dist[q] < 0)
            continue;
        for (Letter x = 0; x < t.alphabet().size(); ++x)
            for (State to : t.successors(q, x))
                dist[to] = std::max(dist[to], dist[q] + 1);
    }
    std::int64_t best = -1;
    for (State q : t.finals())
        best = std::max(best, dist[q]);
    return best < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(best));
}

bool is_cofinite(const Automaton& a, std::size_t state_cap) {
    return is_finite(complement(determinize(a, state_cap)).automaton());
}

std::optional<std::size_t> complement_longest_word(const Automaton& a, std::size_t state_cap) {
    Automaton comp = complement(determinize(a, state_cap)).automaton();
    if (!is_finite(comp))
        throw std::invalid_argument("complement_longest_word: language is not cofinite");
    return longest_word_length(comp);
}

std::vector<std::int64_t> canonical_key(const DfaView& minimal) {
    const std::size_t k = minimal.alphabet().size();
    std::vector<std::int64_t> remap(minimal.state_count(), -1);
    std::vector<State> order;
    std::queue<State> queue;
    queue.push(minimal.initial());
    remap[minimal.initial()] = 0;
    order.push_back(minimal.initial());
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop();
        for (Letter x = 0; x < k; ++x) {
            State to = minimal.next(q, x);
            if (remap[to] < 0) {
                remap[to] = static_cast<std::int64_t>(order.size());
                order.push_back(to);
                queue.push(to);
            }
        }
    }
    std::vector<std::int64_t> key;
    key.push_back(static_cast<std::int64_t>(order.size()));
    key.push_back(static_cast<std::int64_t>(k));
    for (State q : order)
        for (Letter x = 0; x < k; ++x)
            key.push_back(remap[minimal.next(q, x)]);
    for (State q : order)
        key.push_back(minimal.is_final(q) ? 1 : 0);
    return key;
}

bool equivalent(const Automaton& a, const Automaton& b, std::size_t state_cap) {
    if (!(a.alphabet() == b.alphabet()))
        return false;
    return canonical_key(minimize(determinize(a, state_cap))) ==
           canonical_key(minimize(determinize(b, state_cap)));
}

} // namespace subreg
