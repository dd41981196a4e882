#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "wheeler/classify.hpp"
#include "wheeler/oracle.hpp"

using namespace wheeler;

TEST_CASE("is_slt on the fixtures") {
    SltResult left = is_slt(fx::appendix_left_min());
    REQUIRE_FALSE(left.slt);
    REQUIRE(left.witness);
    CHECK(is_slt(fx::appendix_right_min()).slt);
    CHECK(is_slt(fx::sigma_star(3)).slt);
}

TEST_CASE("is_definite") {
    CHECK(is_definite(fx::finite_ab_b()));
    CHECK(is_definite(fx::ends_with_ab()));
    CHECK_FALSE(is_definite(fx::appendix_left()));
}

TEST_CASE("is_reverse_definite") {
    CHECK(is_reverse_definite(fx::a_sigma_star()));
    CHECK_FALSE(is_reverse_definite(fx::appendix_left()));
    CHECK_FALSE(is_reverse_definite(fx::fig1()));
    // Sigma+ is cofinite
    Dfa sp = fx::sigma_star(2);
    Dfa plus = Dfa::make(sp.alphabet, 2, 0);
    for (Sym a = 0; a < 2; ++a) {
        plus.set_edge(0, a, 1);
        plus.set_edge(1, a, 1);
    }
    plus.final_flags[1] = 1;
    CHECK(is_reverse_definite(plus));
}

TEST_CASE("prefix intersection") {
    PrefixIntersection pi = prefix_intersection_finite(fx::a_sigma_star());
    REQUIRE(pi.finite);
    REQUIRE(pi.words.size() == 1);
    CHECK(pi.words[0].empty());

    CHECK_FALSE(prefix_intersection_finite(fx::a_star_binary()).finite);

    PrefixIntersection full = prefix_intersection_finite(fx::sigma_star(2));
    REQUIRE(full.finite);
    CHECK(full.words.empty());
}

TEST_CASE("ew_necessary") {
    EwResult chain = ew_necessary(*minimize(fx::triple_a_loop_chain()));
    REQUIRE_FALSE(chain.possibly_ew);
    // witness: three distinct states sharing the gamma-labeled cycle
    Dfa m = *minimize(fx::triple_a_loop_chain());
    REQUIRE_FALSE(chain.gamma.empty());
    for (State s : {chain.p, chain.q, chain.r}) {
        State cur = s;
        for (Sym a : chain.gamma) cur = m.next(cur, a);
        CHECK(cur == s);
    }
    CHECK(chain.p != chain.q);
    CHECK(chain.q != chain.r);
    CHECK(chain.p != chain.r);

    CHECK(ew_necessary(fx::appendix_left_min()).possibly_ew);
    CHECK(ew_necessary(fx::appendix_right_min()).possibly_ew);
}

TEST_CASE("NotEW verdicts are confirmed by the exact sweep") {
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 11000 + seed, .max_states = 5});
        if (!ew_necessary(d).possibly_ew) CHECK_FALSE(exact_ew_small(d));
    }
}

TEST_CASE("rdef_decomposition closed forms") {
    RdefDecomposition a = rdef_decomposition(fx::a_sigma_star());
    CHECK(a.f == std::vector<Word>{{}});
    CHECK(a.g == std::vector<Word>{{0}});

    RdefDecomposition ab = rdef_decomposition(fx::chain_word("ab"));
    CHECK(ab.f == std::vector<Word>{{0, 1}});
    CHECK(ab.g.empty());

    CHECK_THROWS_AS(rdef_decomposition(fx::appendix_left()), PreconditionError);
}

TEST_CASE("rdef_decomposition round-trips on sampled RDEF languages") {
    int hits = 0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 12000 + seed, .max_states = 5});
        if (!is_reverse_definite(d)) continue;
        ++hits;
        RdefDecomposition dec = rdef_decomposition(d); // throws if reconstruction mismatches
        std::vector<Word> f_in_l;
        for (const Word& w : dec.f)
            if (accepts(d, w)) f_in_l.push_back(w);
        MaybeDfa rebuilt = dfa_from_decomposition(f_in_l, dec.g, d.alphabet);
        REQUIRE(rebuilt);
        CHECK(language_equal(*rebuilt, d));
    }
    CHECK(hits > 5); // the corpus must exercise the property
}

TEST_CASE("classify on the appendix left automaton") {
    ClassificationReport r = classify(fx::appendix_left());
    CHECK_FALSE(r.finite);
    CHECK(r.prefix_universal);
    CHECK_FALSE(r.slt);
    CHECK_FALSE(r.uw);
    CHECK(r.comp_uw);
    CHECK_FALSE(r.definite);
    CHECK_FALSE(r.reverse_definite);
    CHECK(r.ew_possible);
    REQUIRE(r.uw_cert);
    CHECK_FALSE(r.rdef_cert);
}

TEST_CASE("classify on Sigma* and a finite set") {
    ClassificationReport s = classify(fx::sigma_star(2));
    CHECK_FALSE(s.finite);
    CHECK(s.prefix_universal);
    CHECK(s.slt);
    CHECK(s.uw);
    CHECK(s.comp_uw);
    CHECK(s.definite);
    CHECK(s.reverse_definite);
    REQUIRE(s.rdef_cert);

    ClassificationReport f = classify(fx::finite_ab_b());
    CHECK(f.finite);
    CHECK(f.slt);
    CHECK(f.uw);
    CHECK(f.definite);
    CHECK(f.reverse_definite);
}

TEST_CASE("class-theory invariants hold on the random corpus") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 13000 + seed, .max_states = 5});
        ClassificationReport r = classify(d); // classify asserts the invariants itself
        CHECK((r.uw && r.comp_uw) == (r.definite || r.reverse_definite));
        if (r.slt) CHECK(r.uw);
        if (r.prefix_universal && r.uw) CHECK(r.comp_uw);
    }
}

TEST_CASE("slt agrees with bounded double-cycle search") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Dfa d = random_minimal_dfa({.seed = 14000 + seed, .max_states = 4, .alphabet_size = 2});
        bool direct = false;
        // two equally labeled cycles from distinct states, label length <= |Q|^2
        for (const Word& w : fx::short_words(d.sigma(), d.n() * d.n())) {
            if (w.empty()) continue;
            int loops = 0;
            for (State q = 0; q < d.n(); ++q) {
                State cur = q;
                for (Sym a : w) {
                    cur = d.next(cur, a);
                    if (cur == kNoState) break;
                }
                if (cur == q) ++loops;
            }
            if (loops >= 2) {
                direct = true;
                break;
            }
        }
        CHECK(is_slt(d).slt == !direct);
    }
}
