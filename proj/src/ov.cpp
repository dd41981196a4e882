#include "wheeler/ov.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>
#include <thread>

namespace wheeler {

OvInstance gen_ov(int n_vecs, int dim, uint64_t seed, OvMode mode) {
    if (n_vecs < 1 || dim < 1) throw InputError("gen_ov: N and d must be at least 1");
    std::mt19937_64 rng(seed);
    OvInstance inst;
    inst.n_vecs = n_vecs;
    inst.dim = dim;
    auto fill = [&] {
        std::vector<std::vector<uint8_t>> m(n_vecs, std::vector<uint8_t>(dim));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<uint8_t>(rng() & 1);
        return m;
    };
    inst.a = fill();
    inst.b = fill();
    if (mode == OvMode::PlantedYes) {
        int i = static_cast<int>(rng() % n_vecs), j = static_cast<int>(rng() % n_vecs);
        for (int k = 0; k < dim; ++k) {
            inst.a[i][k] = static_cast<uint8_t>(rng() & 1);
            inst.b[j][k] = static_cast<uint8_t>(1 - inst.a[i][k]); // complementary supports
        }
    } else if (mode == OvMode::PlantedNo) {
        int k = static_cast<int>(rng() % dim);
        for (int i = 0; i < n_vecs; ++i) inst.a[i][k] = 1;
        for (int j = 0; j < n_vecs; ++j) inst.b[j][k] = 1;
    }
    return inst;
}

bool solve_ov_brute(const OvInstance& inst) {
    for (const auto& a : inst.a)
        for (const auto& b : inst.b) {
            int dot = 0;
            for (int k = 0; k < inst.dim; ++k) dot += a[k] * b[k];
            if (dot == 0) return true;
        }
    return false;
}

std::string serialize_ov(const OvInstance& inst) {
    std::string out = std::to_string(inst.n_vecs) + " " + std::to_string(inst.dim) + "\n";
    for (const auto* mat : {&inst.a, &inst.b})
        for (const auto& row : *mat) {
            for (uint8_t x : row) out += static_cast<char>('0' + x);
            out += "\n";
        }
    return out;
}

OvInstance parse_ov(const std::string& text) {
    std::istringstream in(text);
    OvInstance inst;
    if (!(in >> inst.n_vecs >> inst.dim) || inst.n_vecs < 1 || inst.dim < 1)
        throw InputError("ov file: bad header line (want 'N d')");
    auto read_matrix = [&] {
        std::vector<std::vector<uint8_t>> m;
        for (int i = 0; i < inst.n_vecs; ++i) {
            std::string row;
            if (!(in >> row) || static_cast<int>(row.size()) != inst.dim)
                throw InputError("ov file: expected " + std::to_string(2 * inst.n_vecs) +
                                 " rows of " + std::to_string(inst.dim) + " bits");
            std::vector<uint8_t> bits;
            for (char ch : row) {
                if (ch != '0' && ch != '1') throw InputError("ov file: rows must be 0/1 bits");
                bits.push_back(static_cast<uint8_t>(ch - '0'));
            }
            m.push_back(std::move(bits));
        }
        return m;
    };
    inst.a = read_matrix();
    inst.b = read_matrix();
    return inst;
}

namespace {

int ceil_log2(int n) {
    int l = 0;
    while ((1 << l) < n) ++l;
    return l;
}

constexpr Sym kHash = 0, kZero = 1, kOne = 2;
inline Sym bit_sym(int bit) { return bit ? kOne : kZero; }

} // namespace

ReductionOutput ov_to_dfa(const OvInstance& inst) {
    const int N = inst.n_vecs, d = inst.dim;
    const int L = std::max(1, ceil_log2(N));
    const int B = 2 * L + d + 1;

    // raw state layout per block t: comb state, 4 entry states, two cycles of
    // length B. The two index regions stop distinct same-side gadgets from
    // sharing cycle labels; the '#' at a unique in-block position pins the
    // rotational alignment of any shared cycle.
    const int per_block = 5 + 2 * B;
    const int n_raw = N * per_block;
    auto comb = [&](int t) { return t * per_block; };
    auto entry_w = [&](int t) { return t * per_block + 1; };
    auto entry_z = [&](int t) { return t * per_block + 2; };
    auto entry_g = [&](int t) { return t * per_block + 3; };
    auto entry_n = [&](int t) { return t * per_block + 4; };
    auto a_cyc = [&](int t, int o) { return t * per_block + 5 + o; };
    auto b_cyc = [&](int t, int o) { return t * per_block + 5 + B + o; };

    Dfa raw = Dfa::make({"#", "0", "1"}, n_raw, comb(0));
    std::fill(raw.final_flags.begin(), raw.final_flags.end(), 1);

    auto ibit = [&](int idx, int o) { return (idx >> (L - 1 - o)) & 1; };
    for (int t = 0; t < N; ++t) {
        if (t + 1 < N) raw.set_edge(comb(t), kHash, comb(t + 1));
        // entry words: ...000 and ...110 into the a-cycle, ...010 into the b-cycle
        raw.set_edge(comb(t), kZero, entry_w(t));
        raw.set_edge(comb(t), kOne, entry_z(t));
        raw.set_edge(entry_w(t), kZero, entry_g(t));
        raw.set_edge(entry_z(t), kOne, entry_g(t));
        raw.set_edge(entry_g(t), kZero, a_cyc(t, 0));
        raw.set_edge(entry_w(t), kOne, entry_n(t));
        raw.set_edge(entry_n(t), kZero, b_cyc(t, 0));

        for (int o = 0; o < B; ++o) {
            int an = a_cyc(t, (o + 1) % B), bn = b_cyc(t, (o + 1) % B);
            if (o == B - 1) {
                raw.set_edge(a_cyc(t, o), kHash, a_cyc(t, 0));
                raw.set_edge(b_cyc(t, o), kHash, b_cyc(t, 0));
            } else if (o < L) {
                // a-side fixes its own index, b-side accepts any
                raw.set_edge(a_cyc(t, o), bit_sym(ibit(t, o)), an);
                raw.set_edge(b_cyc(t, o), kZero, bn);
                raw.set_edge(b_cyc(t, o), kOne, bn);
            } else if (o < 2 * L) {
                raw.set_edge(a_cyc(t, o), kZero, an);
                raw.set_edge(a_cyc(t, o), kOne, an);
                raw.set_edge(b_cyc(t, o), bit_sym(ibit(t, o - L)), bn);
            } else {
                int k = o - 2 * L;
                // compatibility: the a-side admits 1 only where a_t is 0,
                // the b-side spells b_t exactly
                raw.set_edge(a_cyc(t, o), kZero, an);
                if (inst.a[t][k] == 0) raw.set_edge(a_cyc(t, o), kOne, an);
                raw.set_edge(b_cyc(t, o), bit_sym(inst.b[t][k]), bn);
            }
        }
    }

    MinimizeResult mr = minimize_mapped(raw);
    if (!mr.dfa) throw std::logic_error("ov_to_dfa: construction lost its language");
    ReductionOutput out;
    out.dfa = std::move(*mr.dfa);
    for (int t = 0; t < N; ++t) {
        State ah = mr.state_map[a_cyc(t, 0)];
        State bh = mr.state_map[b_cyc(t, 0)];
        if (ah == kNoState || bh == kNoState)
            throw std::logic_error("ov_to_dfa: designated state dropped by minimization");
        out.a_nodes.push_back(ah);
        out.b_nodes.push_back(bh);
    }
    {
        std::vector<State> all = out.a_nodes;
        all.insert(all.end(), out.b_nodes.begin(), out.b_nodes.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::logic_error("ov_to_dfa: designated states merged under minimization");
    }

    // size sanity: linear in N(d + log N) with moderate constants
    const int64_t unit = static_cast<int64_t>(N) * (d + L + 1);
    if (out.dfa.n() > 4 * unit + 64 || out.dfa.edge_count() > 7 * unit + 64)
        throw std::logic_error("ov_to_dfa: construction exceeded its size budget");
    return out;
}

ReductionReport verify_reduction(const ReductionOutput& out, const OvInstance& inst) {
    if (inst.n_vecs > 6 || inst.dim > 6)
        throw PreconditionError("verify_reduction: brute checks need N <= 6 and d <= 6");
    ReductionReport rep;
    const Dfa& d = out.dfa;
    const int n = d.n();
    const int N = inst.n_vecs;

    // C1: minimal for its language
    MaybeDfa mm = minimize(d);
    rep.c1 = mm && isomorphic(*mm, d);
    if (!rep.c1) rep.notes += "C1: not isomorphic to own minimization. ";

    // off-diagonal D^2 as an explicit digraph
    auto enc = [n](State p, State q) { return p * n + q; };
    std::vector<std::vector<int>> adj(static_cast<size_t>(n) * n);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (p == q) continue;
            for (Sym c = 0; c < d.sigma(); ++c) {
                State p2 = d.next(p, c), q2 = d.next(q, c);
                if (p2 != kNoState && q2 != kNoState && p2 != q2) adj[enc(p, q)].push_back(enc(p2, q2));
            }
        }
    auto on_cycle = nodes_on_cycles(n * n, adj);

    auto dot = [&](int i, int j) {
        int s = 0;
        for (int k = 0; k < inst.dim; ++k) s += inst.a[i][k] * inst.b[j][k];
        return s;
    };
    std::vector<char> designated_orth(static_cast<size_t>(n) * n, 0);
    bool c2a = true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            bool orth = dot(i, j) == 0;
            State ah = out.a_nodes[i], bh = out.b_nodes[j];
            if (orth) {
                designated_orth[enc(ah, bh)] = 1;
                designated_orth[enc(bh, ah)] = 1;
            }
            if ((on_cycle[enc(ah, bh)] != 0) != orth || (on_cycle[enc(bh, ah)] != 0) != orth)
                c2a = false;
        }
    // every off-diagonal cycle must pass through a designated orthogonal pair
    std::vector<std::vector<int>> pruned(adj.size());
    for (size_t u = 0; u < adj.size(); ++u) {
        if (designated_orth[u]) continue;
        for (int v : adj[u])
            if (!designated_orth[static_cast<size_t>(v)]) pruned[u].push_back(v);
    }
    bool c2b = !digraph_cycle(n * n, pruned).has_value();
    rep.c2 = c2a && c2b;
    if (!c2a) rep.notes += "C2: designated pair cycle/orthogonality mismatch. ";
    if (!c2b) rep.notes += "C2: off-diagonal cycle avoiding designated orthogonal pairs. ";

    // C3: reachability with the last-3-symbols tracker
    const int kWin = 64; // 3 positions, 4 values each (3 symbols + 'none')
    std::vector<char> seen(static_cast<size_t>(n) * kWin, 0);
    std::deque<std::pair<State, int>> bfs{{d.initial, 63}}; // window "none,none,none"
    seen[static_cast<size_t>(d.initial) * kWin + 63] = 1;
    while (!bfs.empty()) {
        auto [q, w] = bfs.front();
        bfs.pop_front();
        for (Sym c = 0; c < d.sigma(); ++c) {
            State t = d.next(q, c);
            if (t == kNoState) continue;
            int w2 = ((w << 2) | c) & 63;
            if (!seen[static_cast<size_t>(t) * kWin + w2]) {
                seen[static_cast<size_t>(t) * kWin + w2] = 1;
                bfs.push_back({t, w2});
            }
        }
    }
    auto win = [](Sym x, Sym y, Sym z) { return (static_cast<int>(x) << 4) | (static_cast<int>(y) << 2) | z; };
    rep.c3 = true;
    for (int i = 0; i < N; ++i) {
        State ah = out.a_nodes[i];
        if (!seen[static_cast<size_t>(ah) * kWin + win(kZero, kZero, kZero)] ||
            !seen[static_cast<size_t>(ah) * kWin + win(kOne, kOne, kZero)]) {
            rep.c3 = false;
            rep.notes += "C3: a-node " + std::to_string(i) + " misses a 000/110 entry word. ";
        }
        State bh = out.b_nodes[i];
        if (!seen[static_cast<size_t>(bh) * kWin + win(kZero, kOne, kZero)]) {
            rep.c3 = false;
            rep.notes += "C3: b-node " + std::to_string(i) + " misses a 010 entry word. ";
        }
    }

    // C4: end-to-end equivalence (on the minimal automaton, so that negative
    // C1 controls still get a meaningful answer)
    MaybeDfa m4 = minimize(d);
    rep.c4 = m4 && decide_uw(*m4).in_uw == !solve_ov_brute(inst);
    if (!rep.c4) rep.notes += "C4: decide_uw disagrees with brute OV. ";
    return rep;
}

BenchResult bench(const std::vector<std::pair<int, int>>& sizes, int reps, uint64_t seed,
                  int workers, const Budgets& budgets) {
    BenchResult result;
    result.records.resize(sizes.size());

    auto run_one = [&](size_t idx) {
        auto [N, d] = sizes[idx];
        BenchRecord rec;
        rec.n_vecs = N;
        rec.dim = d;
        rec.seed = seed + idx;
        try {
            OvInstance inst = gen_ov(N, d, rec.seed, OvMode::Random);
            ReductionOutput out = ov_to_dfa(inst);
            rec.n_states = out.dfa.n();
            rec.m_edges = out.dfa.edge_count();
            double best = -1;
            for (int r = 0; r < std::max(1, reps); ++r) {
                auto t0 = std::chrono::steady_clock::now();
                UwVerdict v = decide_uw(out.dfa, budgets);
                auto t1 = std::chrono::steady_clock::now();
                double secs = std::chrono::duration<double>(t1 - t0).count();
                if (best < 0 || secs < best) best = secs;
                rec.verdict = v.in_uw ? "InUW" : "NotUW";
                rec.work = v.stats.work();
            }
            rec.seconds = best;
        } catch (const ResourceError& e) {
            rec.verdict = "resource-error";
            rec.seconds = -1;
        }
        result.records[idx] = std::move(rec);
    };

    if (workers <= 1) {
        for (size_t i = 0; i < sizes.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < sizes.size(); i = next.fetch_add(1)) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    // least-squares slope of log(time) vs log(m) over successful records
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (const auto& r : result.records) {
        if (r.seconds <= 0 || r.m_edges <= 0) continue;
        double x = std::log(static_cast<double>(r.m_edges)), y = std::log(r.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    result.growth.points = k;
    if (k >= 2 && sxx * k - sx * sx > 1e-12)
        result.growth.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return result;
}

std::string bench_csv(const BenchResult& result) {
    std::string csv = "N,d,seed,n_states,m_edges,verdict,seconds\n";
    for (const auto& r : result.records) {
        std::ostringstream line;
        line << r.n_vecs << "," << r.dim << "," << r.seed << "," << r.n_states << "," << r.m_edges
             << "," << r.verdict << "," << r.seconds << "\n";
        csv += line.str();
    }
    return csv;
}

} // namespace wheeler
