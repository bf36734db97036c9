#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "subreg/classify.hpp"
#include "subreg/generators.hpp"
#include "subreg/ops.hpp"
#include "subreg/ponfa.hpp"

using namespace subreg;
using namespace subreg::testing;

TEST_CASE("residual_equal basics") {
    Automaton a = make("a", 3, {0}, {1, 2}, {{0, 'a', 1}, {0, 'a', 2}, {1, 'a', 1}, {2, 'a', 2}});
    CHECK(residual_equal(a, 1, 1));
    CHECK(residual_equal(a, 1, 2)); // two identical accepting sinks
    Automaton b = make("a", 3, {0}, {1}, {{0, 'a', 1}, {0, 'a', 2}, {1, 'a', 1}, {2, 'a', 2}});
    CHECK_FALSE(residual_equal(b, 1, 2)); // final sink vs non-final sink
}

TEST_CASE("merging collapses identical accepting sinks") {
    Automaton a = make("a", 3, {0}, {1, 2}, {{0, 'a', 1}, {0, 'a', 2}, {1, 'a', 1}, {2, 'a', 2}});
    auto [merged, trace] = ponfa_merge_minimize(a);
    CHECK(merged.state_count() < 3);
    REQUIRE(!trace.empty());
    CHECK(trace.front().kind == MergeEvent::Kind::Incomparable);
    CHECK(equivalent(a, merged));
}

TEST_CASE("comparable residual-equal pair triggers the strip-then-merge case") {
    // 0 -a-> 1 -a-> 2, with 1 and 2 both accepting sinks of a*.
    Automaton a = make("a", 3, {0}, {1, 2}, {{0, 'a', 1}, {1, 'a', 2}, {2, 'a', 2}});
    // L(_1 A) = a^* = L(_2 A), and 2 is reachable from 1.
    REQUIRE(residual_equal(a, 1, 2));
    auto [merged, trace] = ponfa_merge_minimize(a);
    REQUIRE(!trace.empty());
    CHECK(trace.front().kind == MergeEvent::Kind::ComparableStripped);
    CHECK(equivalent(a, merged));
    CHECK(is_partially_ordered(merged));
}

TEST_CASE("residual-distinct poNFA is untouched") {
    Automaton a = make("ab", 2, {0}, {1}, {{0, 'a', 1}, {1, 'b', 1}});
    auto [merged, trace] = ponfa_merge_minimize(a);
    CHECK(trace.empty());
    CHECK(merged.state_count() == 2);
}

TEST_CASE("merging rejects cyclic automata") {
    Automaton parity = make("a", 2, {0}, {0}, {{0, 'a', 1}, {1, 'a', 0}});
    CHECK_THROWS_AS(ponfa_merge_minimize(parity), std::invalid_argument);
    // m_nfa contains the odd-length two-cycle, so it is no poNFA.
    CHECK_THROWS_AS(ponfa_merge_minimize(m_nfa(3)), std::invalid_argument);
}

TEST_CASE("the repeat-family NFA is already merge-irreducible") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto [merged, trace] = ponfa_merge_minimize(mpp_nfa(n));
        CHECK(trace.empty());
        CHECK(merged.state_count() == n + 2);
    }
}

TEST_CASE("merge-closure invariants on random poNFAs") {
    std::mt19937 rng(79);
    for (int i = 0; i < 200; ++i) {
        Automaton a = random_ponfa(rng, 8, 1 + i % 3);
        auto [merged, trace] = ponfa_merge_minimize(a);

        CHECK(is_partially_ordered(merged));
        CHECK(equivalent(a, merged));
        // All residuals pairwise distinct afterwards.
        for (State q1 = 0; q1 < merged.state_count(); ++q1)
            for (State q2 = q1 + 1; q2 < merged.state_count(); ++q2)
                CHECK_FALSE(residual_equal(merged, q1, q2));
    }
}

TEST_CASE("merge irreducibility is weaker than global minimality") {
    // Recognizes a^* with pairwise-distinct residuals: no merge can fire,
    // so the output keeps 4 states while the minimal DFA has 1.
    Automaton a(Alphabet::of_chars("a"), 4);
    a.add_transition(1, 0, 1);
    a.add_transition(1, 0, 2);
    a.add_transition(2, 0, 3);
    a.add_transition(3, 0, 0);
    for (State q : {0, 1, 3})
        a.set_initial(q);
    for (State q : {0, 2, 3})
        a.set_final(q);

    Automaton sigma_star = make("a", 1, {0}, {0}, {{0, 'a', 0}});
    REQUIRE(equivalent(a, sigma_star));
    auto [merged, trace] = ponfa_merge_minimize(a);
    CHECK(trace.empty());
    CHECK(merged.state_count() == 4);
    CHECK(minimize(determinize(a)).state_count() == 1);
}

TEST_CASE("witness_bound adds depths and DFA sizes") {
    Automaton po2 = make("ab", 3, {0}, {2}, {{0, 'a', 1}, {1, 'b', 2}, {2, 'b', 2}});
    Automaton po3 = make("ab", 4, {0}, {3}, {{0, 'a', 1}, {1, 'b', 2}, {2, 'a', 3}});
    {
        const Automaton list[] = {po2, po3};
        CHECK(witness_bound(list) == 5);
    }
    std::mt19937 rng(83);
    DfaView d = random_dfa(rng, 7, 2);
    while (is_partially_ordered(d.automaton()))
        d = random_dfa(rng, 7, 2);
    {
        const Automaton list[] = {d.automaton()};
        CHECK(witness_bound(list) == d.state_count());
    }
    {
        const Automaton list[] = {po2, d.automaton()};
        CHECK(witness_bound(list) == 2 + d.state_count());
    }
    Automaton nfa = make("a", 2, {0, 1}, {1}, {{0, 'a', 0}, {0, 'a', 1}, {1, 'a', 0}});
    {
        const Automaton list[] = {nfa};
        CHECK_THROWS_AS(witness_bound(list), std::invalid_argument);
    }
}

TEST_CASE("bounded witness search matches the oracle under the promise") {
    Graph triangle{3, {{0, 1}, {0, 2}, {1, 2}}};
    {
        auto inst = vertex_cover_to_ine(triangle, 2);
        auto bounded = bounded_witness_ine(inst.automata);
        REQUIRE(bounded);
        CHECK(bounded->size() == 3);
        CHECK(bounded == ine_oracle(inst.automata));
    }
    {
        auto inst = vertex_cover_to_ine(triangle, 1);
        CHECK_FALSE(bounded_witness_ine(inst.automata));
        CHECK_FALSE(ine_oracle(inst.automata));
    }
    {
        Automaton empty = make("a", 2, {0}, {}, {{0, 'a', 1}, {1, 'a', 1}});
        const Automaton list[] = {empty};
        CHECK_FALSE(bounded_witness_ine(list));
    }
}

TEST_CASE("bounded witness search agrees with the oracle on random poNFAs") {
    std::mt19937 rng(89);
    for (int i = 0; i < 100; ++i) {
        std::vector<Automaton> list;
        std::size_t count = 1 + i % 3;
        for (std::size_t j = 0; j < count; ++j)
            list.push_back(random_ponfa(rng, 5, 2));
        auto bounded = bounded_witness_ine(list);
        auto oracle = ine_oracle(list);
        CHECK(bounded.has_value() == oracle.has_value());
        if (bounded) {
            CHECK(bounded == oracle);
            for (const Automaton& a : list)
                CHECK(accepts(a, *bounded));
        }
    }
}
