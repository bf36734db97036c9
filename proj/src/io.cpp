#include "subreg/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace subreg {

std::string print_automaton(const Automaton& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& s : a.alphabet().symbols())
        out << ' ' << s;
    out << '\n';
    out << "states: " << a.state_count() << '\n';
    out << "initial:";
    for (State q : a.initials())
        out << ' ' << q;
    out << '\n';
    out << "final:";
    for (State q : a.finals())
        out << ' ' << q;
    out << '\n';
    for (State q = 0; q < a.state_count(); ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x)
            for (State to : a.successors(q, x))
                out << q << ' ' << a.alphabet().symbol(x) << ' ' << to << '\n';
    return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

State parse_state(const std::string& tok, std::size_t state_count) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected a state index, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("expected a state index, got '" + tok + "'");
    if (v >= state_count)
        throw ParseError("state index " + tok + " out of range");
    return static_cast<State>(v);
}

struct Section {
    std::vector<std::string> alphabet;
    std::size_t states = 0;
    bool have_states = false;
    std::vector<std::string> initial, final_;
    std::vector<std::array<std::string, 3>> transitions;
};

// Deterministic automata are stored total: a partial one is completed
// with a fresh non-final sink so it immediately qualifies as a DFA.
Automaton complete_if_partial_dfa(const Automaton& a) {
    if (a.initials().size() != 1)
        return a;
    bool missing = false;
    for (State q = 0; q < a.state_count(); ++q)
        for (Letter x = 0; x < a.alphabet().size(); ++x) {
            std::size_t fanout = a.successors(q, x).size();
            if (fanout > 1)
                return a;
            missing = missing || fanout == 0;
        }
    if (!missing)
        return a;
    const State sink = static_cast<State>(a.state_count());
    Automaton out(a.alphabet(), a.state_count() + 1);
    for (State q = 0; q < a.state_count(); ++q) {
        for (Letter x = 0; x < a.alphabet().size(); ++x) {
            const auto& succ = a.successors(q, x);
            out.add_transition(q, x, succ.empty() ? sink : succ.front());
        }
        if (a.is_initial(q))
            out.set_initial(q);
        if (a.is_final(q))
            out.set_final(q);
    }
    for (Letter x = 0; x < a.alphabet().size(); ++x)
        out.add_transition(sink, x, sink);
    out.set_name(a.name());
    return out;
}

Automaton build(const Section& sec) {
    if (!sec.have_states)
        throw ParseError("missing 'states:' line");
    Alphabet alphabet;
    try {
        alphabet = Alphabet(sec.alphabet);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    Automaton a(alphabet, sec.states);
    if (sec.initial.empty())
        throw ParseError("automaton has no initial state");
    for (const auto& tok : sec.initial)
        a.set_initial(parse_state(tok, sec.states));
    for (const auto& tok : sec.final_)
        a.set_final(parse_state(tok, sec.states));
    for (const auto& [from, sym, to] : sec.transitions) {
        auto letter = alphabet.find(sym);
        if (!letter)
            throw ParseError("unknown symbol '" + sym + "' in transition");
        a.add_transition(parse_state(from, sec.states), *letter, parse_state(to, sec.states));
    }
    return complete_if_partial_dfa(a);
}

} // namespace

std::vector<Automaton> parse_automata(const std::string& text) {
    std::vector<Automaton> out;
    std::istringstream in(text);
    std::string line;
    Section sec;
    bool open = false;

    auto flush = [&] {
        if (open)
            out.push_back(build(sec));
        sec = Section{};
        open = false;
    };

    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        const std::string& head = tokens.front();
        if (head == "alphabet:") {
            flush();
            open = true;
            sec.alphabet.assign(tokens.begin() + 1, tokens.end());
        } else if (!open) {
            throw ParseError("expected 'alphabet:' before '" + head + "'");
        } else if (head == "states:") {
            if (tokens.size() != 2)
                throw ParseError("'states:' expects one number");
            sec.states = std::stoul(tokens[1]);
            sec.have_states = true;
        } else if (head == "initial:") {
            sec.initial.assign(tokens.begin() + 1, tokens.end());
        } else if (head == "final:") {
            sec.final_.assign(tokens.begin() + 1, tokens.end());
        } else if (tokens.size() == 3) {
            sec.transitions.push_back({tokens[0], tokens[1], tokens[2]});
        } else {
            throw ParseError("cannot parse line: " + line);
        }
    }
    flush();
    if (out.empty())
        throw ParseError("no automaton found");
    return out;
}

Automaton parse_automaton(const std::string& text) {
    auto list = parse_automata(text);
    if (list.size() != 1)
        throw ParseError("expected exactly one automaton");
    return std::move(list.front());
}

std::vector<Automaton> load_automata_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automata(buf.str());
}

void save_automata_file(const std::string& path, const std::vector<Automaton>& list) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write file: " + path);
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0)
            out << '\n';
        out << print_automaton(list[i]);
    }
}

} // namespace subreg
