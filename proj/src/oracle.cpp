#include "wheeler/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <unordered_map>

namespace wheeler {

std::vector<AlphabetOrder> all_orders(int sigma) {
    if (sigma > 8) throw ResourceError("all_orders: |Sigma| > 8");
    std::vector<Sym> perm(sigma);
    for (int i = 0; i < sigma; ++i) perm[i] = i;
    std::vector<AlphabetOrder> out;
    do {
        out.push_back(AlphabetOrder::from_perm(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool brute_uw(const Dfa& min_dfa) {
    for (const auto& o : all_orders(min_dfa.sigma()))
        if (!is_wheeler_language(min_dfa, o).in_wh) return false;
    return true;
}

bool exact_ew_small(const Dfa& min_dfa) {
    if (min_dfa.sigma() > 6) throw ResourceError("exact_ew_small: |Sigma| > 6");
    for (const auto& o : all_orders(min_dfa.sigma()))
        if (is_wheeler_language(min_dfa, o).in_wh) return true;
    return false;
}

BruteLt brute_lt(const Dfa& d, const AlphabetOrder& order, int length_bound) {
    require_minimal_trimmed(d, "brute_lt");
    const int n = d.n();
    const int bound = length_bound < 0 ? n * n + n : length_bound;
    if (static_cast<int64_t>(bound) * n > 50'000'000)
        throw ResourceError("brute_lt: length bound times states too large");

    using OptWord = std::optional<Word>;
    auto better = [&](const OptWord& cand, OptWord& slot, bool want_min) {
        if (!cand) return;
        if (!slot || (colex_compare(*cand, *slot, order) == (want_min ? Cmp::LT : Cmp::GT)))
            slot = cand;
    };

    std::vector<OptWord> cur_min(n), cur_max(n), best_min(n), best_max(n);
    cur_min[d.initial] = Word{};
    cur_max[d.initial] = Word{};
    best_min[d.initial] = Word{};
    best_max[d.initial] = Word{};
    for (int len = 1; len <= bound; ++len) {
        std::vector<OptWord> nxt_min(n), nxt_max(n);
        bool any = false;
        for (State q = 0; q < n; ++q) {
            if (!cur_min[q]) continue;
            for (Sym a = 0; a < d.sigma(); ++a) {
                State t = d.next(q, a);
                if (t == kNoState) continue;
                any = true;
                Word wmin = *cur_min[q];
                wmin.push_back(a);
                better(wmin, nxt_min[t], true);
                Word wmax = *cur_max[q];
                wmax.push_back(a);
                better(wmax, nxt_max[t], false);
            }
        }
        cur_min.swap(nxt_min);
        cur_max.swap(nxt_max);
        for (State q = 0; q < n; ++q) {
            better(cur_min[q], best_min[q], true);
            better(cur_max[q], best_max[q], false);
        }
        if (!any) break;
    }

    BruteLt res;
    res.n = n;
    res.lt.assign(static_cast<size_t>(n) * n, 0);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (p == q || !best_min[p] || !best_max[q]) continue;
            if (colex_compare(*best_min[p], *best_max[q], order) == Cmp::LT)
                res.lt[static_cast<size_t>(p) * n + q] = 1;
        }
    return res;
}

ExactPTable exact_p_table(const Dfa& d, const Budgets& budgets) {
    require_minimal_trimmed(d, "exact_p_table");
    const int64_t n = d.n();
    const int64_t ext = d.sigma() + 2;
    if (n * n * ext * ext > budgets.pair_nodes)
        throw ResourceError("exact_p_table: |Q|^2 |Sigma+2|^2 exceeds the budget");

    ExactPTable table;
    struct Item {
        State p, q;
        ExtPair e;
    };
    std::deque<Item> work;
    auto insert = [&](State p, State q, ExtPair e) {
        auto [it, fresh] = table[{p, q}].insert(e);
        (void)it;
        if (fresh) work.push_back({p, q, e});
    };

    auto lam = incoming_labels(d);
    const State s = d.initial;
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (p == q) continue;
            if (p == s) insert(p, q, {kSuf, kSuf});
            if (q == s) insert(p, q, {kPre, kPre});
            for (Sym a : lam[p])
                for (Sym b : lam[q])
                    if (a != b) insert(p, q, {a, b});
        }
    while (!work.empty()) {
        auto [p, q, e] = work.front();
        work.pop_front();
        for (Sym c = 0; c < d.sigma(); ++c) {
            State p2 = d.next(p, c), q2 = d.next(q, c);
            if (p2 == kNoState || q2 == kNoState || p2 == q2) continue;
            insert(p2, q2, e);
        }
    }
    return table;
}

bool brute_intertwined(const Dfa& d, State p, State q) {
    if (p == q) throw InputError("brute_intertwined: states must be distinct");
    for (const auto& o : all_orders(d.sigma())) {
        BruteLt lt = brute_lt(d, o);
        if (lt.get(p, q) && lt.get(q, p)) return true;
    }
    return false;
}

Dfa random_minimal_dfa(const RandomDfaSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::string> alphabet;
    for (int i = 0; i < spec.alphabet_size; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));

    for (int attempt = 0; attempt < 100; ++attempt) {
        int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(spec.max_states));
        Dfa d = Dfa::make(alphabet, k, 0);
        for (State q = 0; q < k; ++q)
            for (Sym a = 0; a < d.sigma(); ++a)
                if (unit() < spec.transition_density) d.set_edge(q, a, static_cast<State>(rng() % k));
        for (State q = 0; q < k; ++q)
            if (unit() < spec.final_probability) d.final_flags[q] = 1;
        MaybeDfa m = minimize(d);
        if (m) return *m;
    }
    throw std::runtime_error("random_minimal_dfa: 100 rejection attempts produced empty languages");
}

bool structural_rdef(const Dfa& d) {
    MaybeDfa m = minimize(d);
    if (!m) return true; // empty language is finite
    Dfa c = complete(*m);
    std::vector<char> absorbing(c.n(), 0);
    for (State q = 0; q < c.n(); ++q) {
        bool ab = true;
        for (Sym a = 0; a < c.sigma(); ++a)
            if (c.next(q, a) != q) ab = false;
        absorbing[q] = ab;
    }
    std::vector<std::vector<int>> adj(c.n());
    for (State q = 0; q < c.n(); ++q) {
        if (absorbing[q]) continue;
        for (Sym a = 0; a < c.sigma(); ++a) {
            State t = c.next(q, a);
            if (!absorbing[t]) adj[q].push_back(t);
        }
    }
    return !digraph_cycle(c.n(), adj).has_value();
}

bool structural_def(const Dfa& d) {
    MaybeDfa m = minimize(d);
    if (!m) return true;
    if (m->n() > 12) throw ResourceError("structural_def: determinization guard |Q| <= 12");
    const int n = m->n();
    uint32_t start = 0;
    for (State q = 0; q < n; ++q)
        if (m->is_final(q)) start |= 1u << q;

    // subset construction of the reversal
    std::unordered_map<uint32_t, State> id;
    std::vector<uint32_t> masks;
    auto intern = [&](uint32_t mask) {
        auto [it, fresh] = id.try_emplace(mask, static_cast<State>(masks.size()));
        if (fresh) masks.push_back(mask);
        return it->second;
    };
    intern(start);
    std::vector<std::array<State, 16>> trans;
    for (size_t i = 0; i < masks.size(); ++i) {
        uint32_t mask = masks[i];
        std::array<State, 16> row;
        for (Sym a = 0; a < m->sigma(); ++a) {
            uint32_t pre = 0;
            for (State p = 0; p < n; ++p) {
                State t = m->next(p, a);
                if (t != kNoState && (mask & (1u << t))) pre |= 1u << p;
            }
            row[a] = intern(pre);
        }
        trans.push_back(row);
    }
    Dfa rev = Dfa::make(m->alphabet, static_cast<int>(masks.size()), 0);
    for (State q = 0; q < rev.n(); ++q) {
        for (Sym a = 0; a < rev.sigma(); ++a) rev.set_edge(q, a, trans[q][a]);
        if (masks[q] & (1u << m->initial)) rev.final_flags[q] = 1;
    }
    return structural_rdef(rev);
}

bool language_equal(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet) throw InputError("language_equal: alphabets differ");
    Dfa c1 = complete(d1), c2 = complete(d2);
    std::vector<char> seen(static_cast<size_t>(c1.n()) * c2.n(), 0);
    std::deque<std::pair<State, State>> bfs{{c1.initial, c2.initial}};
    seen[static_cast<size_t>(c1.initial) * c2.n() + c2.initial] = 1;
    while (!bfs.empty()) {
        auto [p, q] = bfs.front();
        bfs.pop_front();
        if (c1.is_final(p) != c2.is_final(q)) return false;
        for (Sym a = 0; a < c1.sigma(); ++a) {
            State p2 = c1.next(p, a), q2 = c2.next(q, a);
            size_t k = static_cast<size_t>(p2) * c2.n() + q2;
            if (!seen[k]) {
                seen[k] = 1;
                bfs.push_back({p2, q2});
            }
        }
    }
    return true;
}

bool language_empty_equal(const MaybeDfa& d1, const MaybeDfa& d2,
                          const std::vector<std::string>& alphabet) {
    if (!d1 && !d2) return true;
    if (d1 && d2) return language_equal(*d1, *d2);
    const Dfa& present = d1 ? *d1 : *d2;
    Dfa empty = empty_language_dfa(alphabet);
    return language_equal(present, empty);
}

std::vector<Word> enumerate_finite_language(const Dfa& d, int64_t word_guard) {
    MaybeDfa t = trim(d);
    std::vector<Word> out;
    if (!t) return out;
    std::vector<std::vector<int>> adj(t->n());
    for (State q = 0; q < t->n(); ++q)
        for (Sym a = 0; a < t->sigma(); ++a)
            if (t->next(q, a) != kNoState) adj[q].push_back(t->next(q, a));
    if (digraph_cycle(t->n(), adj))
        throw PreconditionError("enumerate_finite_language: language is infinite");

    Word cur;
    int64_t budget = word_guard;
    auto dfs = [&](auto&& self, State q) -> void {
        if (t->is_final(q)) {
            if (--budget < 0) throw ResourceError("enumerate_finite_language: word guard exceeded");
            out.push_back(cur);
        }
        for (Sym a = 0; a < t->sigma(); ++a) {
            State nq = t->next(q, a);
            if (nq == kNoState) continue;
            cur.push_back(a);
            self(self, nq);
            cur.pop_back();
        }
    };
    dfs(dfs, t->initial);
    return out;
}

MaybeDfa dfa_from_decomposition(const std::vector<Word>& f, const std::vector<Word>& g,
                                std::vector<std::string> alphabet) {
    const int sigma = static_cast<int>(alphabet.size());
    struct Node {
        std::vector<State> child;
        bool f_word = false, g_word = false;
    };
    std::vector<Node> trie(1, Node{std::vector<State>(sigma, kNoState), false, false});
    auto insert = [&](const Word& w, bool is_g) {
        State cur = 0;
        for (Sym a : w) {
            if (trie[cur].child[a] == kNoState) {
                trie[cur].child[a] = static_cast<State>(trie.size());
                trie.push_back(Node{std::vector<State>(sigma, kNoState), false, false});
            }
            cur = trie[cur].child[a];
        }
        (is_g ? trie[cur].g_word : trie[cur].f_word) = true;
    };
    for (const Word& w : f) insert(w, false);
    for (const Word& w : g) insert(w, true);

    // DFA: trie nodes plus an accept-everything sink entered at G words
    const State sink = static_cast<State>(trie.size());
    Dfa d = Dfa::make(std::move(alphabet), static_cast<int>(trie.size()) + 1, 0);
    for (State v = 0; v < sink; ++v) {
        d.final_flags[v] = trie[v].f_word ? 1 : 0;
        for (Sym a = 0; a < sigma; ++a) {
            State c = trie[v].child[a];
            if (c == kNoState) continue;
            d.set_edge(v, a, trie[c].g_word ? sink : c);
        }
    }
    d.final_flags[sink] = 1;
    for (Sym a = 0; a < sigma; ++a) d.set_edge(sink, a, sink);
    if (!trie[0].g_word) return minimize(d);
    // epsilon in G: language is Sigma*
    Dfa all = empty_language_dfa(d.alphabet);
    all.final_flags[0] = 1;
    return minimize(all);
}

} // namespace wheeler
