#include "subreg/classify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "subreg/ops.hpp"

namespace subreg {

std::string to_string(SuggestedLevel level) {
    switch (level) {
    case SuggestedLevel::ST0: return "st-0";
    case SuggestedLevel::ST_HALF: return "st-1/2";
    case SuggestedLevel::DD0: return "dd-0";
    case SuggestedLevel::ST1_PT: return "st-1";
    case SuggestedLevel::UNKNOWN: return "unknown";
    }
    return "unknown";
}

namespace {

// Iterative Tarjan; returns the size of the largest SCC.
std::size_t largest_scc(const Automaton& a) {
    const std::size_t n = a.state_count();
    std::vector<std::vector<State>> adj(n);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                if (to != q)
                    adj[q].push_back(to);

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::size_t best = n == 0 ? 0 : 1;
    int counter = 0;

    struct Frame {
        State q;
        std::size_t child;
    };
    for (State root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [q, child] = frames.back();
            if (child < adj[q].size()) {
                State to = adj[q][child++];
                if (index[to] < 0) {
                    index[to] = low[to] = counter++;
                    stack.push_back(to);
                    on_stack[to] = true;
                    frames.push_back({to, 0});
                } else if (on_stack[to]) {
                    low[q] = std::min(low[q], index[to]);
                }
            } else {
                if (low[q] == index[q]) {
                    std::size_t size = 0;
                    State popped;
                    do {
                        popped = stack.back();
                        stack.pop_back();
                        on_stack[popped] = false;
                        ++size;
                    } while (popped != q);
                    best = std::max(best, size);
                }
                State done = q;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().q] = std::min(low[frames.back().q], low[done]);
            }
        }
    }
    return best;
}

} // namespace

bool is_partially_ordered(const Automaton& a) {
    return largest_scc(a) <= 1;
}

std::size_t depth(const Automaton& a) {
    if (!is_partially_ordered(a))
        throw std::invalid_argument("depth: automaton is not partially ordered");
    const std::size_t n = a.state_count();

    // Self-loop-free graph is a DAG here; longest path from the initials.
    std::vector<std::vector<State>> adj(n);
    std::vector<std::size_t> indeg(n, 0);
    for (State q = 0; q < n; ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                if (to != q) {
                    adj[q].push_back(to);
                    ++indeg[to];
                }
    std::vector<State> topo;
    for (State q = 0; q < n; ++q)
        if (indeg[q] == 0)
            topo.push_back(q);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (State to : adj[topo[i]])
            if (--indeg[to] == 0)
                topo.push_back(to);

    std::vector<std::int64_t> dist(n, -1);
    for (State q : a.initials())
        dist[q] = 0;
    std::int64_t best = 0;
    for (State q : topo) {
        if (dist[q] < 0)
            continue;
        best = std::max(best, dist[q]);
        for (State to : adj[q])
            dist[to] = std::max(dist[to], dist[q] + 1);
    }
    return static_cast<std::size_t>(best);
}

bool is_confluent(const DfaView& d) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet().size();
    for (Letter a = 0; a < k; ++a) {
        for (Letter b = a + 1; b < k; ++b) {
            // Backward reachability of the diagonal in the pair graph
            // restricted to moves by the letters {a, b}.
            std::vector<bool> good(n * n, false);
            std::queue<std::size_t> queue;
            for (State q = 0; q < n; ++q) {
                good[q * n + q] = true;
                queue.push(q * n + q);
            }
            // Predecessor lists of the pair graph.
            std::vector<std::vector<std::size_t>> preds(n * n);
            for (State p = 0; p < n; ++p)
                for (State q = 0; q < n; ++q)
                    for (Letter x : {a, b})
                        preds[d.next(p, x) * n + d.next(q, x)].push_back(p * n + q);
            while (!queue.empty()) {
                std::size_t pair = queue.front();
                queue.pop();
                for (std::size_t pred : preds[pair])
                    if (!good[pred]) {
                        good[pred] = true;
                        queue.push(pred);
                    }
            }
            for (State q = 0; q < n; ++q)
                if (!good[d.next(q, a) * n + d.next(q, b)])
                    return false;
        }
    }
    return true;
}

bool is_commutative(const DfaView& d) {
    if (minimize(d).state_count() != d.state_count())
        throw std::invalid_argument("is_commutative: input DFA is not minimal");
    const std::size_t k = d.alphabet().size();
    for (State q = 0; q < d.state_count(); ++q)
        for (Letter a = 0; a < k; ++a)
            for (Letter b = a + 1; b < k; ++b)
                if (d.next(d.next(q, a), b) != d.next(d.next(q, b), a))
                    return false;
    return true;
}

namespace {

using TransMap = std::vector<State>;

TransMap compose(const TransMap& first, const TransMap& then) {
    TransMap out(first.size());
    for (std::size_t q = 0; q < first.size(); ++q)
        out[q] = then[first[q]];
    return out;
}

bool eventually_stable(const TransMap& m) {
    // Powers of m eventually repeat; aperiodic iff they hit a fixed point
    // (m^{k+1} = m^k) instead of a longer cycle.
    std::map<TransMap, std::size_t> seen;
    TransMap cur = m;
    for (std::size_t i = 0;; ++i) {
        auto [it, inserted] = seen.emplace(cur, i);
        if (!inserted)
            return false; // cycle of length > 1
        TransMap next = compose(cur, m);
        if (next == cur)
            return true;
        cur = std::move(next);
    }
}

} // namespace

std::optional<bool> is_aperiodic(const DfaView& d, std::size_t cap) {
    const std::size_t n = d.state_count();
    std::vector<TransMap> letters;
    for (Letter x = 0; x < d.alphabet().size(); ++x) {
        TransMap m(n);
        for (State q = 0; q < n; ++q)
            m[q] = d.next(q, x);
        letters.push_back(std::move(m));
    }

    std::map<TransMap, bool> elements;
    std::queue<TransMap> queue;
    for (const auto& m : letters)
        if (elements.emplace(m, true).second) {
            if (elements.size() > cap)
                return std::nullopt;
            queue.push(m);
        }
    while (!queue.empty()) {
        TransMap cur = std::move(queue.front());
        queue.pop();
        if (!eventually_stable(cur))
            return false;
        for (const auto& gen : letters) {
            TransMap next = compose(cur, gen);
            if (elements.emplace(next, true).second) {
                if (elements.size() > cap)
                    return std::nullopt;
                queue.push(std::move(next));
            }
        }
    }
    return true;
}

bool is_shuffle_ideal(const DfaView& d) {
    // N' = d with a universal self-loop on every state; L(N') = L shuffle Sigma*.
    Automaton closure = d.automaton();
    for (State q = 0; q < closure.state_count(); ++q)
        for (Letter x = 0; x < closure.alphabet().size(); ++x)
            closure.add_transition(q, x, q);
    const Automaton comp = complement(d).automaton();
    const Automaton pair[] = {closure, comp};
    return !ine_oracle(pair).has_value();
}

bool is_piecewise_testable(const DfaView& d) {
    DfaView m = minimize(d);
    return is_partially_ordered(m.automaton()) && is_confluent(m);
}

ClassReport classify(const Automaton& a, const Caps& caps) {
    DfaView m = minimize(determinize(a, caps.determinize_states));
    ClassReport report;
    report.partially_ordered = is_partially_ordered(m.automaton());
    report.confluent = is_confluent(m);
    report.commutative = is_commutative(m);
    report.finite = is_finite(m.automaton());
    report.cofinite = is_finite(complement(m).automaton());
    report.aperiodic = is_aperiodic(m, caps.monoid_elements);
    report.shuffle_ideal = is_shuffle_ideal(m);
    report.piecewise_testable = report.partially_ordered && report.confluent;

    const bool trivial = m.state_count() == 1;
    if (trivial)
        report.suggested_level = SuggestedLevel::ST0;
    else if (report.shuffle_ideal)
        report.suggested_level = SuggestedLevel::ST_HALF;
    else if (report.finite || report.cofinite)
        report.suggested_level = SuggestedLevel::DD0;
    else if (report.piecewise_testable)
        report.suggested_level = SuggestedLevel::ST1_PT;
    else
        report.suggested_level = SuggestedLevel::UNKNOWN;
    return report;
}

} // namespace subreg
