#include "subreg/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "subreg/ops.hpp"

namespace subreg {

void Graph::validate() const {
    for (auto [u, v] : edges)
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("graph edge endpoint out of range");
}

void CnfFormula::validate() const {
    for (const auto& clause : clauses) {
        if (clause.empty() || clause.size() > 3)
            throw std::invalid_argument("clause size must be 1..3");
        for (int lit : clause) {
            std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (lit == 0 || var > variable_count)
                throw std::invalid_argument("literal out of range");
        }
    }
}

void TransformationSystem::validate() const {
    auto check_map = [&](const std::vector<State>& f) {
        if (f.size() != domain_size)
            throw std::invalid_argument("transformation is not total on Q");
        for (State q : f)
            if (q >= domain_size)
                throw std::invalid_argument("transformation image out of range");
    };
    if (domain_size == 0)
        throw std::invalid_argument("transformation system needs a nonempty domain");
    for (const auto& g : generators)
        check_map(g);
    check_map(target);
}

Automaton gap2_to_nfa(const Graph& g, std::size_t s, std::size_t t) {
    g.validate();
    if (s >= g.vertex_count || t >= g.vertex_count)
        throw std::invalid_argument("gap2_to_nfa: s or t out of range");
    for (auto [u, v] : g.edges)
        if (u >= v)
            throw std::invalid_argument("gap2_to_nfa: graph must be ordered (edges i < j)");
    Automaton a(Alphabet::of_chars("a"), g.vertex_count);
    for (State q = 0; q < g.vertex_count; ++q)
        a.add_transition(q, 0, q);
    for (auto [u, v] : g.edges)
        a.add_transition(static_cast<State>(u), 0, static_cast<State>(v));
    a.set_initial(static_cast<State>(s));
    a.set_final(static_cast<State>(t));
    a.set_name("gap2");
    return a;
}

DfaView gap1_to_dfa(const Graph& g, std::size_t s, std::size_t t) {
    g.validate();
    if (s >= g.vertex_count || t >= g.vertex_count)
        throw std::invalid_argument("gap1_to_dfa: s or t out of range");
    std::vector<std::optional<std::size_t>> succ(g.vertex_count);
    for (auto [u, v] : g.edges) {
        if (succ[u])
            throw std::invalid_argument("gap1_to_dfa: outdegree exceeds one");
        succ[u] = v;
    }
    // Extra sink completes vertices without outgoing edges; t self-loops.
    const State sink = static_cast<State>(g.vertex_count);
    Automaton a(Alphabet::of_chars("a"), g.vertex_count + 1);
    for (State q = 0; q < g.vertex_count; ++q) {
        if (q == t)
            a.add_transition(q, 0, q);
        else if (succ[q])
            a.add_transition(q, 0, static_cast<State>(*succ[q]));
        else
            a.add_transition(q, 0, sink);
    }
    a.add_transition(sink, 0, sink);
    a.set_initial(static_cast<State>(s));
    a.set_final(static_cast<State>(t));
    a.set_name("gap1");
    return DfaView(std::move(a));
}

namespace {

Automaton edge_gadget(std::size_t n, std::size_t i1, std::size_t i2) {
    // Main chain q^0..q^{n+1}, side chain q'^{i1+1}..q'^n; reading a 1 at
    // position i1 or i2 switches to the side chain, whose accepting end is
    // reached after exactly n letters overall.
    const std::size_t main_len = n + 2;
    const std::size_t side_len = n - i1;
    auto main_id = [&](std::size_t j) { return static_cast<State>(j); };
    auto side_id = [&](std::size_t j) { return static_cast<State>(main_len + (j - (i1 + 1))); };

    Automaton a(Alphabet::of_chars("01"), main_len + side_len);
    for (std::size_t j = 0; j <= n; ++j) {
        if (j == i1 || j == i2) {
            a.add_transition(main_id(j), 0, main_id(j + 1));
            a.add_transition(main_id(j), 1, side_id(j + 1));
        } else {
            a.add_transition(main_id(j), 0, main_id(j + 1));
            a.add_transition(main_id(j), 1, main_id(j + 1));
        }
    }
    a.add_transition(main_id(n + 1), 0, main_id(n + 1));
    a.add_transition(main_id(n + 1), 1, main_id(n + 1));
    for (std::size_t j = i1 + 1; j < n; ++j) {
        a.add_transition(side_id(j), 0, side_id(j + 1));
        a.add_transition(side_id(j), 1, side_id(j + 1));
    }
    a.add_transition(side_id(n), 0, side_id(n));
    a.add_transition(side_id(n), 1, side_id(n));
    a.set_initial(main_id(0));
    a.set_final(main_id(n + 1));
    a.set_final(side_id(n));
    return a;
}

Automaton grid_gadget(std::size_t n, std::size_t k) {
    // (n,k)-grid: x counts letters read, y counts ones; finals are the
    // length-n column with at most k ones.
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<State>(i * (k + 2) + j); };
    Automaton a(Alphabet::of_chars("01"), (n + 2) * (k + 2));
    for (std::size_t i = 0; i <= n + 1; ++i) {
        for (std::size_t j = 0; j <= k + 1; ++j) {
            if (i == n + 1 || j == k + 1) {
                a.add_transition(id(i, j), 0, id(i, j));
                a.add_transition(id(i, j), 1, id(i, j));
            } else {
                a.add_transition(id(i, j), 0, id(i + 1, j));
                a.add_transition(id(i, j), 1, id(i + 1, j + 1));
            }
        }
    }
    a.set_initial(id(0, 0));
    for (std::size_t j = 0; j <= k; ++j)
        a.set_final(id(n, j));
    a.set_name("grid");
    return a;
}

} // namespace

IneInstance vertex_cover_to_ine(const Graph& g, std::size_t k) {
    g.validate();
    if (g.vertex_count == 0)
        throw std::invalid_argument("vertex_cover_to_ine: graph needs vertices");
    IneInstance inst;
    inst.promise = Promise::ST1;
    const std::size_t n = g.vertex_count;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        if (u == v)
            throw std::invalid_argument("vertex_cover_to_ine: self-loop edge");
        std::size_t i1 = std::min(u, v), i2 = std::max(u, v);
        Automaton gadget = edge_gadget(n, i1, i2);
        gadget.set_name("edge-" + std::to_string(i1) + "-" + std::to_string(i2));
        inst.automata.push_back(std::move(gadget));
    }
    inst.automata.push_back(grid_gadget(n, k));
    return inst;
}

IneInstance sat_to_commutative_ine(const CnfFormula& f) {
    f.validate();
    if (f.variable_count == 0)
        throw std::invalid_argument("sat_to_commutative_ine: formula needs variables");
    const std::size_t n = f.variable_count;
    std::vector<std::string> symbols;
    for (std::size_t j = 1; j <= n; ++j)
        symbols.push_back("x" + std::to_string(j));
    for (std::size_t j = 1; j <= n; ++j)
        symbols.push_back("~x" + std::to_string(j));
    const Alphabet alphabet(symbols);
    auto letter_of = [&](int lit) -> Letter {
        std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
        return static_cast<Letter>(lit > 0 ? var - 1 : n + var - 1);
    };

    IneInstance inst;
    inst.promise = Promise::COMMUTATIVE_SF;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        // L_{c_i}: some clause literal occurs somewhere.
        Automaton a(alphabet, 2);
        std::vector<bool> in_clause(2 * n, false);
        for (int lit : f.clauses[c])
            in_clause[letter_of(lit)] = true;
        for (Letter x = 0; x < 2 * n; ++x) {
            a.add_transition(0, x, in_clause[x] ? 1 : 0);
            a.add_transition(1, x, 1);
        }
        a.set_initial(0);
        a.set_final(1);
        a.set_name("clause-" + std::to_string(c + 1));
        inst.automata.push_back(std::move(a));
    }
    for (std::size_t j = 1; j <= n; ++j) {
        // L_{x_j}: not both polarities of variable j occur.
        // States encode (seen x_j, seen ~x_j); (1,1) is the rejecting sink.
        Automaton a(alphabet, 4);
        const Letter pos = static_cast<Letter>(j - 1);
        const Letter neg = static_cast<Letter>(n + j - 1);
        for (State q = 0; q < 4; ++q)
            for (Letter x = 0; x < 2 * n; ++x) {
                State to = q;
                if (x == pos)
                    to = q | 1;
                else if (x == neg)
                    to = q | 2;
                a.add_transition(q, x, to);
            }
        a.set_initial(0);
        a.set_final(0);
        a.set_final(1);
        a.set_final(2);
        a.set_name("var-" + std::to_string(j));
        inst.automata.push_back(std::move(a));
    }
    return inst;
}

Alphabet digit_alphabet(std::size_t n) {
    std::vector<std::string> symbols;
    for (std::size_t i = 1; i <= n; ++i)
        symbols.push_back(std::to_string(i));
    return Alphabet(symbols);
}

Word zimin(std::size_t j) {
    if (j == 0 || j > 20)
        throw std::invalid_argument("zimin: j must be in 1..20");
    Word u{0};
    for (Letter next = 1; next < j; ++next) {
        Word copy = u;
        u.push_back(next);
        u.insert(u.end(), copy.begin(), copy.end());
    }
    return u;
}

bool in_m_double_prime(const Word& w, std::size_t n) {
    for (Letter x : w)
        if (x >= n)
            throw std::out_of_range("in_m_double_prime: letter out of range");
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t q = p + 1; q < w.size(); ++q) {
            if (w[q] == w[p])
                return true;
            if (w[q] > w[p])
                break; // larger letter in between kills this start
        }
    }
    return false;
}

bool in_m(const Word& w, std::size_t n) {
    return w.size() % 2 == 1 || in_m_double_prime(w, n);
}

Word phi_encode(const Word& w, std::size_t n) {
    Word out;
    out.reserve(w.size() * n);
    for (Letter x : w) {
        if (x >= n)
            throw std::out_of_range("phi_encode: letter out of range");
        const std::size_t value = x + 1;
        out.insert(out.end(), value, 0);
        out.insert(out.end(), n - value, 1);
    }
    return out;
}

bool in_l(const Word& w, std::size_t n) {
    // Decode blocks a^i b^{n-i}; any break means "not a proper encoding",
    // which is in L_n by definition.
    if (w.size() % n != 0)
        return true;
    Word decoded;
    for (std::size_t pos = 0; pos < w.size(); pos += n) {
        std::size_t i = 0;
        while (i < n && w[pos + i] == 0)
            ++i;
        if (i == 0)
            return true;
        for (std::size_t rest = i; rest < n; ++rest)
            if (w[pos + rest] != 1)
                return true;
        decoded.push_back(static_cast<Letter>(i - 1));
    }
    return in_m(decoded, n);
}

Automaton mpp_nfa(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("mpp_nfa: n must be >= 1");
    // States: 0 = hub q_I, 1..n = guess states q_i, n+1 = accepting sink.
    Automaton a(digit_alphabet(n), n + 2);
    const State hub = 0, sink = static_cast<State>(n + 1);
    for (Letter i = 0; i < n; ++i) {
        a.add_transition(hub, i, hub);
        a.add_transition(hub, i, static_cast<State>(i + 1));
        for (Letter j = 0; j < i; ++j)
            a.add_transition(static_cast<State>(i + 1), j, static_cast<State>(i + 1));
        a.add_transition(static_cast<State>(i + 1), i, sink);
        a.add_transition(sink, i, sink);
    }
    a.set_initial(hub);
    a.set_final(sink);
    a.set_name("mpp-" + std::to_string(n));
    return a;
}

Automaton m_nfa(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("m_nfa: n must be >= 1");
    Automaton odd(digit_alphabet(n), 2);
    for (Letter i = 0; i < n; ++i) {
        odd.add_transition(0, i, 1);
        odd.add_transition(1, i, 0);
    }
    odd.set_initial(0);
    odd.set_final(1);
    Automaton a = disjoint_union(odd, mpp_nfa(n));
    a.set_name("m-" + std::to_string(n));
    return a;
}

namespace {

// Simulation of mpp's transition structure on block-encoded input: states
// (q, pos, phase) where q is the mpp state, pos the position inside the
// current block and phase tracks whether the a-run is still open. The mpp
// move fires at the a-to-b switch, where the block's letter is known.
struct BlockMachine {
    std::size_t n;
    std::size_t boundary_count; // (q, 0) states

    explicit BlockMachine(std::size_t n_) : n(n_), boundary_count(n + 2) {}

    State boundary(std::size_t q) const { return static_cast<State>(q); }
    State a_run(std::size_t q, std::size_t pos) const {
        return static_cast<State>(boundary_count + q * (n - 1) + (pos - 1));
    }
    State b_run(std::size_t q, std::size_t pos) const {
        return static_cast<State>(boundary_count + boundary_count * (n - 1) + q * (n - 1) +
                                  (pos - 1));
    }
    std::size_t total() const { return boundary_count * (1 + 2 * (n - 1)); }

    std::vector<std::size_t> moves(std::size_t q, std::size_t letter) const {
        // mpp over {1..n}: hub = 0, guesses 1..n, sink = n+1.
        if (q == 0)
            return {0, letter};
        if (q == n + 1)
            return {n + 1};
        if (letter < q)
            return {q};
        if (letter == q)
            return {n + 1};
        return {};
    }
};

} // namespace

Automaton l_nfa(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("l_nfa: n must be >= 1");
    const Alphabet binary = Alphabet::of_chars("ab");

    // B': accepts improper encodings plus proper encodings with an odd
    // number of blocks. Scan states track (position in block, phase) and
    // the block-count parity; a broken block falls into the accepting sink.
    Automaton bprime = [&] {
        const std::size_t scan_a = n - 1, scan_b = n >= 2 ? n - 2 : 0;
        const std::size_t per_parity = 1 + scan_a + scan_b;
        auto s0 = [&](std::size_t par) { return static_cast<State>(par * per_parity); };
        auto ap = [&](std::size_t p, std::size_t par) {
            return static_cast<State>(par * per_parity + p); // p in 1..n-1
        };
        auto bp = [&](std::size_t p, std::size_t par) {
            return static_cast<State>(par * per_parity + scan_a + (p - 1)); // p in 2..n-1
        };
        const State sink = static_cast<State>(2 * per_parity);
        Automaton b(binary, 2 * per_parity + 1);
        for (std::size_t par = 0; par < 2; ++par) {
            const std::size_t flip = 1 - par;
            if (n == 1) {
                b.add_transition(s0(par), 0, s0(flip));
            } else {
                b.add_transition(s0(par), 0, ap(1, par));
                for (std::size_t p = 1; p < n; ++p) {
                    b.add_transition(ap(p, par), 0,
                                     p + 1 == n ? s0(flip) : ap(p + 1, par));
                    b.add_transition(ap(p, par), 1,
                                     p + 1 == n ? s0(flip) : bp(p + 1, par));
                }
                for (std::size_t p = 2; p < n; ++p) {
                    b.add_transition(bp(p, par), 1,
                                     p + 1 == n ? s0(flip) : bp(p + 1, par));
                    b.add_transition(bp(p, par), 0, sink);
                }
            }
            b.add_transition(s0(par), 1, sink);
        }
        b.add_transition(sink, 0, sink);
        b.add_transition(sink, 1, sink);
        b.set_initial(s0(0));
        b.set_final(s0(1));
        b.set_final(sink);
        for (std::size_t par = 0; par < 2; ++par) {
            for (std::size_t p = 1; p < n; ++p)
                b.set_final(ap(p, par));
            for (std::size_t p = 2; p < n; ++p)
                b.set_final(bp(p, par));
        }
        return b;
    }();

    // B'': exactly the proper encodings of M''_n words.
    Automaton bsecond = [&] {
        BlockMachine bm(n);
        Automaton b(binary, bm.total());
        for (std::size_t q = 0; q < bm.boundary_count; ++q) {
            if (n == 1) {
                for (std::size_t to : bm.moves(q, 1))
                    b.add_transition(bm.boundary(q), 0, bm.boundary(to));
                continue;
            }
            b.add_transition(bm.boundary(q), 0, bm.a_run(q, 1));
            for (std::size_t pos = 1; pos < n; ++pos) {
                // continue the a-run, or complete the all-a block (letter n)
                if (pos + 1 < n)
                    b.add_transition(bm.a_run(q, pos), 0, bm.a_run(q, pos + 1));
                else
                    for (std::size_t to : bm.moves(q, n))
                        b.add_transition(bm.a_run(q, pos), 0, bm.boundary(to));
                // switch to b: the block letter equals pos
                for (std::size_t to : bm.moves(q, pos)) {
                    if (pos + 1 == n)
                        b.add_transition(bm.a_run(q, pos), 1, bm.boundary(to));
                    else
                        b.add_transition(bm.a_run(q, pos), 1, bm.b_run(to, pos + 1));
                }
            }
            for (std::size_t pos = 2; pos < n; ++pos)
                b.add_transition(bm.b_run(q, pos), 1,
                                 pos + 1 == n ? bm.boundary(q) : bm.b_run(q, pos + 1));
        }
        b.set_initial(bm.boundary(0));
        b.set_final(bm.boundary(n + 1));
        return trim(b);
    }();

    Automaton a = disjoint_union(bprime, bsecond);
    a.set_name("l-" + std::to_string(n));
    return a;
}

SeparationReport separation_report(std::size_t n) {
    if (n == 0 || n > 12)
        throw std::invalid_argument("separation_report: n must be in 1..12");
    SeparationReport report;
    report.n = n;
    const Word u = zimin(n);
    report.zimin_length = u.size();
    if (report.zimin_length != (std::size_t{1} << n) - 1)
        throw std::logic_error("separation_report: |u_n| != 2^n - 1");
    report.ones_count = static_cast<std::size_t>(std::count(u.begin(), u.end(), 0));
    if (report.ones_count != std::size_t{1} << (n - 1))
        throw std::logic_error("separation_report: #1(u_n) != 2^{n-1}");

    const Automaton m = m_nfa(n);
    if (!accepts(m, u))
        throw std::logic_error("separation_report: u_n rejected by m_nfa");
    for (std::size_t pos = 0; pos < u.size(); ++pos) {
        if (u[pos] != 0)
            continue;
        Word deleted;
        deleted.reserve(u.size() - 1);
        deleted.insert(deleted.end(), u.begin(), u.begin() + pos);
        deleted.insert(deleted.end(), u.begin() + pos + 1, u.end());
        if (accepts(m, deleted))
            throw std::logic_error("separation_report: a single-1-deletion is accepted");
    }
    report.ponfa_lower_bound = report.ones_count + 1;
    return report;
}

IneInstance monoid_to_ine(const TransformationSystem& ts) {
    ts.validate();
    std::vector<std::string> symbols;
    for (std::size_t g = 0; g < ts.generators.size(); ++g)
        symbols.push_back("g" + std::to_string(g + 1));
    if (symbols.empty())
        throw std::invalid_argument("monoid_to_ine: no generators");
    const Alphabet alphabet(symbols);

    IneInstance inst;
    for (State q = 0; q < ts.domain_size; ++q) {
        Automaton a(alphabet, ts.domain_size);
        for (State p = 0; p < ts.domain_size; ++p)
            for (Letter x = 0; x < ts.generators.size(); ++x)
                a.add_transition(p, x, ts.generators[x][p]);
        a.set_initial(q);
        a.set_final(ts.target[q]);
        a.set_name("monoid-state-" + std::to_string(q));
        inst.automata.push_back(std::move(a));
    }
    return inst;
}

bool monoid_membership(const TransformationSystem& ts, std::size_t cap) {
    ts.validate();
    std::vector<State> identity(ts.domain_size);
    for (State q = 0; q < ts.domain_size; ++q)
        identity[q] = q;
    if (ts.target == identity)
        return true;
    std::map<std::vector<State>, bool> seen;
    std::vector<std::vector<State>> queue{identity};
    seen.emplace(identity, true);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& gen : ts.generators) {
            std::vector<State> next(ts.domain_size);
            for (State q = 0; q < ts.domain_size; ++q)
                next[q] = gen[queue[head][q]];
            if (next == ts.target)
                return true;
            if (seen.emplace(next, true).second) {
                if (seen.size() > cap)
                    throw CapExceeded("monoid_membership: closure cap exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    bool have_count = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok == "vertices:") {
            if (!(ls >> g.vertex_count))
                throw ParseError("graph: bad vertices line");
            have_count = true;
        } else {
            std::size_t u = 0, v = 0;
            std::istringstream edge(line);
            if (!(edge >> u >> v))
                throw ParseError("graph: bad edge line: " + line);
            g.edges.emplace_back(u, v);
        }
    }
    if (!have_count)
        throw ParseError("graph: missing 'vertices:' line");
    g.validate();
    return g;
}

CnfFormula parse_cnf(const std::string& text) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok == "c")
            continue;
        if (tok == "p") {
            std::string fmt;
            std::size_t clause_count = 0;
            if (!(ls >> fmt >> f.variable_count >> clause_count) || fmt != "cnf")
                throw ParseError("cnf: bad problem line");
            have_header = true;
            continue;
        }
        std::istringstream nums(line);
        int lit = 0;
        while (nums >> lit) {
            if (lit == 0) {
                f.clauses.push_back(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!have_header)
        throw ParseError("cnf: missing 'p cnf' line");
    if (!clause.empty())
        f.clauses.push_back(clause);
    f.validate();
    return f;
}

TransformationSystem parse_transformation_system(const std::string& text) {
    TransformationSystem ts;
    std::istringstream in(text);
    std::string line;
    bool have_size = false, have_target = false;
    auto parse_map = [&](std::istringstream& ls) {
        std::vector<State> f;
        std::size_t v = 0;
        while (ls >> v)
            f.push_back(static_cast<State>(v));
        return f;
    };
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok == "size:") {
            if (!(ls >> ts.domain_size))
                throw ParseError("system: bad size line");
            have_size = true;
        } else if (tok == "gen:") {
            ts.generators.push_back(parse_map(ls));
        } else if (tok == "target:") {
            ts.target = parse_map(ls);
            have_target = true;
        } else {
            throw ParseError("system: cannot parse line: " + line);
        }
    }
    if (!have_size || !have_target)
        throw ParseError("system: missing size or target");
    ts.validate();
    return ts;
}

} // namespace subreg
