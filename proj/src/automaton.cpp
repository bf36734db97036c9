#include "subreg/automaton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace subreg {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must contain at least one symbol");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty())
            throw std::invalid_argument("alphabet symbol must be nonempty");
        if (!seen.insert(s).second)
            throw std::invalid_argument("duplicate alphabet symbol: " + s);
    }
}

Alphabet Alphabet::of_chars(const std::string& letters) {
    std::vector<std::string> symbols;
    symbols.reserve(letters.size());
    for (char c : letters)
        symbols.emplace_back(1, c);
    return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::find(const std::string& symbol) const {
    for (Letter a = 0; a < symbols_.size(); ++a)
        if (symbols_[a] == symbol)
            return a;
    return std::nullopt;
}

std::string Alphabet::render(const Word& w) const {
    bool all_single = std::all_of(symbols_.begin(), symbols_.end(),
                                  [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !all_single)
            out += ' ';
        out += symbol(w[i]);
    }
    return out;
}

Automaton::Automaton(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      delta_(state_count, std::vector<std::vector<State>>(alphabet_.size())),
      initial_(state_count, false),
      final_(state_count, false) {}

void Automaton::check_state(State q) const {
    if (q >= state_count_)
        throw std::out_of_range("state index out of range");
}

void Automaton::add_transition(State from, Letter a, State to) {
    check_state(from);
    check_state(to);
    if (a >= alphabet_.size())
        throw std::out_of_range("letter index out of range");
    auto& succ = delta_[from][a];
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to)
        succ.insert(it, to);
}

void Automaton::set_initial(State q) {
    check_state(q);
    initial_[q] = true;
}

void Automaton::set_final(State q) {
    check_state(q);
    final_[q] = true;
}

const std::vector<State>& Automaton::successors(State q, Letter a) const {
    check_state(q);
    if (a >= alphabet_.size())
        throw std::out_of_range("letter index out of range");
    return delta_[q][a];
}

std::vector<State> Automaton::initials() const {
    std::vector<State> out;
    for (State q = 0; q < state_count_; ++q)
        if (initial_[q])
            out.push_back(q);
    return out;
}

std::vector<State> Automaton::finals() const {
    std::vector<State> out;
    for (State q = 0; q < state_count_; ++q)
        if (final_[q])
            out.push_back(q);
    return out;
}

bool Automaton::has_final_initial() const {
    for (State q = 0; q < state_count_; ++q)
        if (initial_[q] && final_[q])
            return true;
    return false;
}

bool Automaton::deterministic_total() const {
    if (initials().size() != 1)
        return false;
    for (State q = 0; q < state_count_; ++q)
        for (Letter a = 0; a < alphabet_.size(); ++a)
            if (delta_[q][a].size() != 1)
                return false;
    return true;
}

void Automaton::validate() const {
    if (alphabet_.size() == 0)
        throw std::invalid_argument("automaton has an empty alphabet");
    if (initials().empty())
        throw std::invalid_argument("automaton has no initial state");
}

Automaton Automaton::with_initials(std::vector<State> qs) const {
    Automaton out = *this;
    std::fill(out.initial_.begin(), out.initial_.end(), false);
    for (State q : qs)
        out.set_initial(q);
    return out;
}

Automaton Automaton::with_finals(std::vector<State> qs) const {
    Automaton out = *this;
    std::fill(out.final_.begin(), out.final_.end(), false);
    for (State q : qs)
        out.set_final(q);
    return out;
}

Automaton Automaton::letter_restriction(Letter a) const {
    if (a >= alphabet_.size())
        throw std::out_of_range("letter index out of range");
    Automaton out(Alphabet({alphabet_.symbol(a)}), state_count_);
    for (State q = 0; q < state_count_; ++q) {
        for (State to : delta_[q][a])
            out.add_transition(q, 0, to);
        if (initial_[q])
            out.set_initial(q);
        if (final_[q])
            out.set_final(q);
    }
    return out;
}

DfaView::DfaView(Automaton a) : aut_(std::move(a)) {
    if (!aut_.deterministic_total())
        throw std::invalid_argument("automaton is not a total DFA");
    initial_ = aut_.initials().front();
}

State DfaView::run(State q, const Word& w) const {
    for (Letter a : w)
        q = next(q, a);
    return q;
}

bool accepts(const Automaton& a, const Word& w) {
    std::vector<bool> cur(a.state_count(), false);
    bool any = false;
    for (State q = 0; q < a.state_count(); ++q)
        if (a.is_initial(q))
            cur[q] = any = true;
    if (!any)
        return false;
    for (Letter x : w) {
        if (x >= a.alphabet().size())
            throw std::out_of_range("letter index out of range");
        std::vector<bool> nxt(a.state_count(), false);
        for (State q = 0; q < a.state_count(); ++q)
            if (cur[q])
                for (State to : a.successors(q, x))
                    nxt[to] = true;
        cur.swap(nxt);
    }
    for (State q = 0; q < a.state_count(); ++q)
        if (cur[q] && a.is_final(q))
            return true;
    return false;
}

std::vector<State> step_all(const Automaton& a, const std::vector<State>& from, const Word& w) {
    std::vector<bool> cur(a.state_count(), false);
    for (State q : from)
        cur.at(q) = true;
    for (Letter x : w) {
        std::vector<bool> nxt(a.state_count(), false);
        for (State q = 0; q < a.state_count(); ++q)
            if (cur[q])
                for (State to : a.successors(q, x))
                    nxt[to] = true;
        cur.swap(nxt);
    }
    std::vector<State> out;
    for (State q = 0; q < a.state_count(); ++q)
        if (cur[q])
            out.push_back(q);
    return out;
}

Automaton disjoint_union(const Automaton& a, const Automaton& b) {
    if (!(a.alphabet() == b.alphabet()))
        throw std::invalid_argument("disjoint_union: alphabets differ");
    Automaton out(a.alphabet(), a.state_count() + b.state_count());
    const State off = static_cast<State>(a.state_count());
    for (State q = 0; q < a.state_count(); ++q) {
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                out.add_transition(q, x, to);
        if (a.is_initial(q))
            out.set_initial(q);
        if (a.is_final(q))
            out.set_final(q);
    }
    for (State q = 0; q < b.state_count(); ++q) {
        for (Letter x = 0; x < b.alphabet().size(); ++x)
            for (State to : b.successors(q, x))
                out.add_transition(q + off, x, to + off);
        if (b.is_initial(q))
            out.set_initial(q + off);
        if (b.is_final(q))
            out.set_final(q + off);
    }
    return out;
}

namespace {

std::vector<bool> forward_reachable(const Automaton& a) {
    std::vector<bool> seen(a.state_count(), false);
    std::vector<State> stack = a.initials();
    for (State q : stack)
        seen[q] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                if (!seen[to]) {
                    seen[to] = true;
                    stack.push_back(to);
                }
    }
    return seen;
}

std::vector<bool> backward_reachable(const Automaton& a) {
    std::vector<std::vector<State>> preds(a.state_count());
    for (State q = 0; q < a.state_count(); ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                preds[to].push_back(q);
    std::vector<bool> seen(a.state_count(), false);
    std::vector<State> stack = a.finals();
    for (State q : stack)
        seen[q] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : preds[q])
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
    }
    return seen;
}

} // namespace

Automaton trim(const Automaton& a) {
    const auto fwd = forward_reachable(a);
    const auto bwd = backward_reachable(a);
    std::vector<State> remap(a.state_count(), 0);
    std::size_t kept = 0;
    for (State q = 0; q < a.state_count(); ++q)
        if (fwd[q] && bwd[q])
            remap[q] = static_cast<State>(kept++);
    Automaton out(a.alphabet(), kept);
    for (State q = 0; q < a.state_count(); ++q) {
        if (!(fwd[q] && bwd[q]))
            continue;
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                if (fwd[to] && bwd[to])
                    out.add_transition(remap[q], x, remap[to]);
        if (a.is_initial(q))
            out.set_initial(remap[q]);
        if (a.is_final(q))
            out.set_final(remap[q]);
    }
    return out;
}

} // namespace subreg
