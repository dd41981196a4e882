#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "wheeler/oracle.hpp"

using namespace wheeler;

TEST_CASE("lt_relation on the running example") {
    Dfa m = fx::fig1_min(); // 0=s, 1={q1,q2}, 2=q4, 3=q3, 4=q5
    AlphabetOrder ord = AlphabetOrder::declaration(4);
    LtRelation lt = lt_relation(m, ord);
    CHECK(lt.get(1, 2)); // some a c^k precedes d
    CHECK_FALSE(lt.get(2, 1));
    for (State q = 0; q < m.n(); ++q) CHECK_FALSE(lt.get(q, q));
}

TEST_CASE("lt_relation on a single-word chain") {
    Dfa m = *minimize(fx::chain_word("ab"));
    AlphabetOrder ord = AlphabetOrder::declaration(2);
    LtRelation lt = lt_relation(m, ord);
    CHECK(lt.get(0, 1)); // empty word precedes "a"
    CHECK_FALSE(lt.get(1, 0));
}

TEST_CASE("lt_relation agrees with the bounded word oracle") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 3000 + seed, .max_states = 5, .alphabet_size = 3});
        for (const AlphabetOrder& ord : all_orders(d.sigma())) {
            LtRelation lt = lt_relation(d, ord);
            BruteLt ref = brute_lt(d, ord);
            for (State p = 0; p < d.n(); ++p)
                for (State q = 0; q < d.n(); ++q)
                    if (p != q) REQUIRE(lt.get(p, q) == ref.get(p, q));
        }
    }
}

TEST_CASE("lt witness words check out under colex_compare") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 4000 + seed, .max_states = 5, .alphabet_size = 3});
        AlphabetOrder ord = all_orders(3)[seed % 6];
        LtRelation lt = lt_relation(d, ord);
        for (State p = 0; p < d.n(); ++p)
            for (State q = 0; q < d.n(); ++q) {
                if (p == q || !lt.get(p, q)) continue;
                auto [alpha, beta] = lt_witness_words(d, lt, p, q);
                CHECK(colex_compare(alpha, beta, ord) == Cmp::LT);
                // alpha must lead into p, beta into q
                auto run = [&](const Word& w) {
                    State s = d.initial;
                    for (Sym a : w) s = d.next(s, a);
                    return s;
                };
                CHECK(run(alpha) == p);
                CHECK(run(beta) == q);
            }
    }
}

TEST_CASE("forward closure of LT") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 5000 + seed, .max_states = 6});
        AlphabetOrder ord = AlphabetOrder::declaration(d.sigma());
        LtRelation lt = lt_relation(d, ord);
        for (State p = 0; p < d.n(); ++p)
            for (State q = 0; q < d.n(); ++q) {
                if (p == q || !lt.get(p, q)) continue;
                for (Sym c = 0; c < d.sigma(); ++c) {
                    State p2 = d.next(p, c), q2 = d.next(q, c);
                    if (p2 != kNoState && q2 != kNoState && p2 != q2) CHECK(lt.get(p2, q2));
                }
            }
    }
}

TEST_CASE("trichotomy on input-consistent automata") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Dfa d = make_input_consistent(random_minimal_dfa({.seed = 6000 + seed, .max_states = 5}));
        AlphabetOrder ord = AlphabetOrder::declaration(d.sigma());
        LtRelation lt = lt_fixpoint(d, ord);
        for (State p = 0; p < d.n(); ++p)
            for (State q = p + 1; q < d.n(); ++q) {
                // p <_D q, q <_D p, or intertwined: never "neither"
                CHECK((lt.get(p, q) || lt.get(q, p)));
            }
    }
}

TEST_CASE("Wheeler axioms: the unique order of the running example") {
    Dfa d = fx::fig1();
    AlphabetOrder ord = AlphabetOrder::declaration(4);
    std::vector<State> good; // s < q1 < q2 < q3 < q4 < q5
    for (const char* name : {"s", "q1", "q2", "q3", "q4", "q5"}) good.push_back(fx::st(d, name));
    CHECK(validate_wheeler_axioms(d, good, ord).ok());

    std::vector<State> perm = {0, 1, 2, 3, 4, 5};
    int ok_count = 0;
    do {
        if (validate_wheeler_axioms(d, perm, ord).ok()) {
            ++ok_count;
            CHECK(perm == good);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(ok_count == 1);
}

TEST_CASE("Wheeler axioms reject non-input-consistent automata") {
    Dfa d = fx::appendix_left();
    std::vector<State> id = {0, 1, 2, 3};
    AxiomCheck check = validate_wheeler_axioms(d, id, AlphabetOrder::declaration(3));
    CHECK(check.kind == AxiomCheck::NotInputConsistent);
}

TEST_CASE("automaton colex order on the running example") {
    Dfa d = fx::fig1();
    ColexOrderResult res = automaton_colex_order(d, AlphabetOrder::declaration(4));
    auto* total = std::get_if<TotalStateOrder>(&res);
    REQUIRE(total);
    std::vector<State> good;
    for (const char* name : {"s", "q1", "q2", "q3", "q4", "q5"}) good.push_back(fx::st(d, name));
    CHECK(total->states == good);
}

TEST_CASE("colex order agrees with exhaustive axiom checking") {
    Dfa d = fx::fig1();
    for (const AlphabetOrder& ord : all_orders(4)) {
        ColexOrderResult res = automaton_colex_order(d, ord);
        std::vector<State> perm = {0, 1, 2, 3, 4, 5};
        bool any_ok = false;
        do {
            if (validate_wheeler_axioms(d, perm, ord).ok()) any_ok = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (auto* total = std::get_if<TotalStateOrder>(&res)) {
            CHECK(validate_wheeler_axioms(d, total->states, ord).ok());
        } else {
            CHECK_FALSE(any_ok);
        }
    }
}

TEST_CASE("colex order on a single path") {
    Dfa d = fx::chain_word("ab");
    ColexOrderResult res = automaton_colex_order(d, AlphabetOrder::declaration(2));
    auto* total = std::get_if<TotalStateOrder>(&res);
    REQUIRE(total);
    CHECK(total->states == std::vector<State>{0, 1, 2});
}

TEST_CASE("colex order preconditions") {
    CHECK_THROWS_AS(automaton_colex_order(fx::appendix_left(), AlphabetOrder::declaration(3)),
                    PreconditionError); // not input consistent
}

TEST_CASE("is_wheeler_language on the fixtures") {
    AlphabetOrder abc = AlphabetOrder::declaration(3);
    CHECK_FALSE(is_wheeler_language(fx::appendix_left_min(), abc).in_wh);
    CHECK(is_wheeler_language(fx::fig1_min(), AlphabetOrder::declaration(4)).in_wh);
    CHECK(is_wheeler_language(fx::sigma_star(3), abc).in_wh);

    // a < d < c < f separates the two c-loops
    AlphabetOrder adcf = AlphabetOrder::parse("a,d,c,f", fx::fig1().alphabet);
    WheelerResult res = is_wheeler_language(fx::fig1_min(), adcf);
    REQUIRE_FALSE(res.in_wh);
    REQUIRE(res.violation);
    const WheelerViolation& v = *res.violation;
    CHECK(colex_compare(v.alpha, v.beta, adcf) == Cmp::LT);
    CHECK(colex_compare(v.beta2, v.alpha2, adcf) == Cmp::LT);
    // cycle lies in D^2 and passes through (p,q)
    bool hits_pair = false;
    Dfa m = fx::fig1_min();
    for (size_t i = 0; i < v.cycle.size(); ++i) {
        auto [p, q] = v.cycle[i];
        if (p == v.p && q == v.q) hits_pair = true;
        auto [np, nq] = v.cycle[(i + 1) % v.cycle.size()];
        CHECK(m.next(p, v.cycle_labels[i]) == np);
        CHECK(m.next(q, v.cycle_labels[i]) == nq);
    }
    CHECK(hits_pair);
}
