#include <doctest.h>

#include "fixtures.hpp"
#include "wheeler/oracle.hpp"
#include "wheeler/ov.hpp"

using namespace wheeler;

TEST_CASE("gen_ov modes") {
    OvInstance yes = gen_ov(4, 4, 7, OvMode::PlantedYes);
    CHECK(solve_ov_brute(yes));
    OvInstance no = gen_ov(5, 4, 3, OvMode::PlantedNo);
    CHECK_FALSE(solve_ov_brute(no));
    for (const auto& a : no.a)
        for (const auto& b : no.b) {
            int dot = 0;
            for (int k = 0; k < no.dim; ++k) dot += a[k] * b[k];
            CHECK(dot >= 1);
        }
    OvInstance r1 = gen_ov(4, 4, 11, OvMode::Random);
    OvInstance r2 = gen_ov(4, 4, 11, OvMode::Random);
    CHECK(r1.a == r2.a);
    CHECK(r1.b == r2.b);
}

TEST_CASE("OV serialization round-trip") {
    OvInstance inst = gen_ov(3, 5, 2, OvMode::Random);
    OvInstance back = parse_ov(serialize_ov(inst));
    CHECK(back.n_vecs == inst.n_vecs);
    CHECK(back.dim == inst.dim);
    CHECK(back.a == inst.a);
    CHECK(back.b == inst.b);
    CHECK_THROWS_AS(parse_ov("2 x\n"), InputError);
    CHECK_THROWS_AS(parse_ov("1 2\n10\n"), InputError);
    CHECK_THROWS_AS(parse_ov("1 2\n12\n01\n"), InputError);
}

TEST_CASE("solve_ov_brute tiny cases") {
    OvInstance inst{1, 2, {{1, 0}}, {{0, 1}}};
    CHECK(solve_ov_brute(inst));
    OvInstance inst2{1, 2, {{1, 1}}, {{1, 0}}};
    CHECK_FALSE(solve_ov_brute(inst2));
}

TEST_CASE("ov_to_dfa decides the tiny instances through decide_uw") {
    ReductionOutput yes = ov_to_dfa({1, 2, {{1, 0}}, {{0, 1}}});
    CHECK_FALSE(decide_uw(yes.dfa).in_uw);
    ReductionOutput no = ov_to_dfa({1, 2, {{1, 1}}, {{1, 1}}});
    CHECK(decide_uw(no.dfa).in_uw);
}

TEST_CASE("reduction size stays linear with moderate constants") {
    for (auto [n, d] : {std::pair{4, 4}, {8, 6}, {16, 8}}) {
        OvInstance inst = gen_ov(n, d, 1, OvMode::Random);
        ReductionOutput out = ov_to_dfa(inst);
        int l = 1;
        while ((1 << l) < n) ++l;
        int64_t unit = static_cast<int64_t>(n) * (d + l + 1);
        CHECK(out.dfa.n() <= 4 * unit);
        CHECK(out.dfa.edge_count() <= 7 * unit);
    }
}

TEST_CASE("verify_reduction passes on planted instances") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        for (OvMode mode : {OvMode::PlantedYes, OvMode::PlantedNo, OvMode::Random}) {
            OvInstance inst = gen_ov(4, 4, 100 + seed, mode);
            ReductionOutput out = ov_to_dfa(inst);
            ReductionReport rep = verify_reduction(out, inst);
            INFO(rep.notes);
            CHECK(rep.all());
        }
    }
}

TEST_CASE("verify_reduction catches a corrupted automaton") {
    OvInstance inst = gen_ov(3, 3, 5, OvMode::Random);
    ReductionOutput out = ov_to_dfa(inst);
    // graft a duplicate of a multi-predecessor state: same language, not minimal
    Dfa& d = out.dfa;
    std::vector<int> indeg(d.n(), 0);
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a)
            if (d.next(q, a) != kNoState) ++indeg[d.next(q, a)];
    State victim = kNoState, pred = kNoState;
    Sym pred_sym = -1;
    for (State q = 0; q < d.n() && victim == kNoState; ++q)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState && indeg[t] >= 2) {
                victim = t;
                pred = q;
                pred_sym = a;
                break;
            }
        }
    REQUIRE(victim != kNoState);
    State dup = d.n();
    d.final_flags.push_back(d.final_flags[victim]);
    d.state_names.clear();
    d.delta_flat.resize(static_cast<size_t>(dup + 1) * d.sigma(), kNoState);
    for (Sym a = 0; a < d.sigma(); ++a) d.set_edge(dup, a, d.next(victim, a));
    d.set_edge(pred, pred_sym, dup);
    d.is_minimal = d.is_trimmed = false;
    ReductionReport rep = verify_reduction(out, inst);
    CHECK_FALSE(rep.c1);
}

TEST_CASE("010 sorts between 000 and 110 under every alphabet order") {
    // the order-independence backbone of the reduction's designated suffixes
    for (const AlphabetOrder& ord : all_orders(3)) {
        Word w000 = {1, 1, 1};
        Word w110 = {2, 2, 1};
        Word w010 = {1, 2, 1};
        bool asc = colex_compare(w000, w110, ord) == Cmp::LT;
        const Word& lo = asc ? w000 : w110;
        const Word& hi = asc ? w110 : w000;
        CHECK(colex_compare(lo, w010, ord) == Cmp::LT);
        CHECK(colex_compare(w010, hi, ord) == Cmp::LT);
    }
}

TEST_CASE("bench reports per-size minima and a sane slope") {
    BenchResult res = bench({{8, 6}, {16, 6}, {32, 6}}, 2, 9);
    REQUIRE(res.records.size() == 3);
    for (const BenchRecord& r : res.records) {
        CHECK(r.seconds > 0);
        CHECK((r.verdict == "InUW" || r.verdict == "NotUW"));
        CHECK(r.n_states > 0);
    }
    CHECK(res.growth.points == 3);
    std::string csv = bench_csv(res);
    CHECK(csv.rfind("N,d,seed,n_states,m_edges,verdict,seconds\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("bench workers produce the same records as sequential") {
    BenchResult seq = bench({{4, 4}, {8, 4}}, 1, 3, 1);
    BenchResult par = bench({{4, 4}, {8, 4}}, 1, 3, 2);
    REQUIRE(seq.records.size() == par.records.size());
    for (size_t i = 0; i < seq.records.size(); ++i) {
        CHECK(seq.records[i].n_states == par.records[i].n_states);
        CHECK(seq.records[i].verdict == par.records[i].verdict);
    }
}
