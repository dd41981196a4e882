#include "wheeler/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace wheeler {

Dfa Dfa::make(std::vector<std::string> alphabet, int n_states, State initial) {
    Dfa d;
    d.alphabet = std::move(alphabet);
    d.state_names.clear();
    d.initial = initial;
    d.delta_flat.assign(static_cast<size_t>(n_states) * d.alphabet.size(), kNoState);
    d.final_flags.assign(n_states, 0);
    return d;
}

int Dfa::edge_count() const {
    int m = 0;
    for (State t : delta_flat)
        if (t != kNoState) ++m;
    return m;
}

std::string Dfa::state_name(State q) const {
    if (q >= 0 && q < static_cast<State>(state_names.size()) && !state_names[q].empty())
        return state_names[q];
    return "q" + std::to_string(q);
}

Sym Dfa::symbol_id(const std::string& token) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == token) return static_cast<Sym>(i);
    return -1;
}

bool accepts(const Dfa& d, const Word& word) {
    State q = d.initial;
    for (Sym a : word) {
        if (a < 0 || a >= d.sigma()) throw InputError("accepts: symbol id out of range");
        q = d.next(q, a);
        if (q == kNoState) return false;
    }
    return d.is_final(q);
}

bool accepts_tokens(const Dfa& d, const std::vector<std::string>& tokens) {
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) {
        Sym a = d.symbol_id(t);
        if (a < 0) throw InputError("accepts: unknown symbol '" + t + "'");
        w.push_back(a);
    }
    return accepts(d, w);
}

namespace {

std::vector<char> reachable_mask(const Dfa& d) {
    std::vector<char> seen(d.n(), 0);
    std::deque<State> bfs{d.initial};
    seen[d.initial] = 1;
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop_front();
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState && !seen[t]) {
                seen[t] = 1;
                bfs.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<char> coreachable_mask(const Dfa& d, const std::vector<char>& from_finals) {
    // reverse BFS from every state flagged in from_finals
    std::vector<std::vector<std::pair<State, Sym>>> rev(d.n());
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState) rev[t].push_back({q, a});
        }
    std::vector<char> seen(d.n(), 0);
    std::deque<State> bfs;
    for (State q = 0; q < d.n(); ++q)
        if (from_finals[q]) {
            seen[q] = 1;
            bfs.push_back(q);
        }
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop_front();
        for (auto [p, a] : rev[q])
            if (!seen[p]) {
                seen[p] = 1;
                bfs.push_back(p);
            }
    }
    return seen;
}

// Renumber states in BFS order from initial, symbols in declaration order.
// Requires every state reachable.
Dfa canonical_renumber(const Dfa& d, std::vector<State>* perm_out = nullptr) {
    std::vector<State> newid(d.n(), kNoState);
    std::vector<State> order;
    order.reserve(d.n());
    std::deque<State> bfs{d.initial};
    newid[d.initial] = 0;
    order.push_back(d.initial);
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop_front();
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState && newid[t] == kNoState) {
                newid[t] = static_cast<State>(order.size());
                order.push_back(t);
                bfs.push_back(t);
            }
        }
    }
    Dfa out = Dfa::make(d.alphabet, static_cast<int>(order.size()), 0);
    for (State q = 0; q < d.n(); ++q) {
        if (newid[q] == kNoState) continue; // unreachable (caller guarantees none for canonical use)
        out.final_flags[newid[q]] = d.final_flags[q];
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState) out.set_edge(newid[q], a, newid[t]);
        }
    }
    out.is_trimmed = d.is_trimmed;
    out.is_minimal = d.is_minimal;
    out.is_complete = d.is_complete;
    if (perm_out) *perm_out = newid;
    return out;
}

} // namespace

MaybeDfa trim(const Dfa& d) {
    auto fwd = reachable_mask(d);
    auto bwd = coreachable_mask(d, [&] {
        std::vector<char> f(d.final_flags.begin(), d.final_flags.end());
        return f;
    }());
    std::vector<State> newid(d.n(), kNoState);
    int cnt = 0;
    for (State q = 0; q < d.n(); ++q)
        if (fwd[q] && bwd[q]) newid[q] = cnt++;
    if (newid[d.initial] == kNoState) return std::nullopt;
    Dfa out = Dfa::make(d.alphabet, cnt, newid[d.initial]);
    if (!d.state_names.empty()) out.state_names.resize(cnt);
    for (State q = 0; q < d.n(); ++q) {
        if (newid[q] == kNoState) continue;
        out.final_flags[newid[q]] = d.final_flags[q];
        if (!d.state_names.empty() && q < static_cast<State>(d.state_names.size()))
            out.state_names[newid[q]] = d.state_names[q];
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState && newid[t] != kNoState) out.set_edge(newid[q], a, newid[t]);
        }
    }
    out.is_trimmed = true;
    return out;
}

Dfa complete(const Dfa& d) {
    bool total = true;
    for (State t : d.delta_flat)
        if (t == kNoState) {
            total = false;
            break;
        }
    if (total) {
        Dfa out = d;
        out.is_complete = true;
        return out;
    }
    Dfa out = Dfa::make(d.alphabet, d.n() + 1, d.initial);
    out.state_names = d.state_names;
    State sink = d.n();
    for (State q = 0; q < d.n(); ++q) {
        out.final_flags[q] = d.final_flags[q];
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            out.set_edge(q, a, t == kNoState ? sink : t);
        }
    }
    for (Sym a = 0; a < d.sigma(); ++a) out.set_edge(sink, a, sink);
    out.is_complete = true;
    return out;
}

Dfa empty_language_dfa(std::vector<std::string> alphabet) {
    Dfa d = Dfa::make(std::move(alphabet), 1, 0);
    for (Sym a = 0; a < d.sigma(); ++a) d.set_edge(0, a, 0);
    d.is_complete = true;
    return d;
}

MinimizeResult minimize_mapped(const Dfa& input) {
    MinimizeResult res;
    res.state_map.assign(input.n(), kNoState);

    MaybeDfa trimmed = trim(input);
    if (!trimmed) return res; // empty language

    // where each input state went during trimming
    std::vector<State> to_trimmed(input.n(), kNoState);
    {
        // recompute the same keep set trim used
        auto fwd = reachable_mask(input);
        std::vector<char> f(input.final_flags.begin(), input.final_flags.end());
        auto bwd = coreachable_mask(input, f);
        int cnt = 0;
        for (State q = 0; q < input.n(); ++q)
            if (fwd[q] && bwd[q]) to_trimmed[q] = cnt++;
    }

    Dfa c = complete(*trimmed);

    // Moore-style partition refinement by successor-class signatures.
    std::vector<int> cls(c.n());
    for (State q = 0; q < c.n(); ++q) cls[q] = c.is_final(q) ? 1 : 0;
    int n_classes = 2;
    // all-final or all-nonfinal collapses to one class
    {
        bool any0 = false, any1 = false;
        for (int x : cls) (x ? any1 : any0) = true;
        if (!any0 || !any1) {
            std::fill(cls.begin(), cls.end(), 0);
            n_classes = 1;
        }
    }
    while (true) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(c.n());
        std::vector<int> sig(c.sigma() + 1);
        for (State q = 0; q < c.n(); ++q) {
            sig[0] = cls[q];
            for (Sym a = 0; a < c.sigma(); ++a) sig[a + 1] = cls[c.next(q, a)];
            auto [it, _] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
            next_cls[q] = it->second;
        }
        int next_n = static_cast<int>(sig_ids.size());
        cls.swap(next_cls);
        if (next_n == n_classes) break;
        n_classes = next_n;
    }

    // quotient automaton
    Dfa quo = Dfa::make(c.alphabet, n_classes, cls[c.initial]);
    for (State q = 0; q < c.n(); ++q) {
        quo.final_flags[cls[q]] = c.final_flags[q];
        for (Sym a = 0; a < c.sigma(); ++a) quo.set_edge(cls[q], a, cls[c.next(q, a)]);
    }

    // drop the dead class (empty residual), if any, and renumber canonically
    MaybeDfa quo_trimmed = trim(quo);
    if (!quo_trimmed) return res; // cannot happen: language non-empty
    std::vector<State> quo_keep(quo.n(), kNoState);
    {
        auto fwd = reachable_mask(quo);
        std::vector<char> f(quo.final_flags.begin(), quo.final_flags.end());
        auto bwd = coreachable_mask(quo, f);
        int cnt = 0;
        for (State q = 0; q < quo.n(); ++q)
            if (fwd[q] && bwd[q]) quo_keep[q] = cnt++;
    }
    std::vector<State> perm;
    Dfa out = canonical_renumber(*quo_trimmed, &perm);
    out.is_trimmed = true;
    out.is_minimal = true;

    for (State q = 0; q < input.n(); ++q) {
        State t = to_trimmed[q];
        if (t == kNoState) continue;
        State k = quo_keep[cls[t]];
        if (k == kNoState) continue; // cannot happen for useful states
        res.state_map[q] = perm[k];
    }
    res.dfa = std::move(out);
    return res;
}

MaybeDfa minimize(const Dfa& d) { return minimize_mapped(d).dfa; }

MaybeDfa complement(const Dfa& d) {
    MaybeDfa m = minimize(d);
    Dfa base = m ? complete(*m) : empty_language_dfa(d.alphabet);
    for (auto& f : base.final_flags) f = f ? 0 : 1;
    MaybeDfa t = trim(base);
    if (!t) return std::nullopt;
    Dfa out = canonical_renumber(*t);
    out.is_trimmed = true;
    out.is_minimal = true; // complement of the minimal complete DFA stays minimal
    return out;
}

bool is_finite_language(const Dfa& d) {
    MaybeDfa t = trim(d);
    if (!t) return true;
    std::vector<std::vector<int>> adj(t->n());
    for (State q = 0; q < t->n(); ++q)
        for (Sym a = 0; a < t->sigma(); ++a) {
            State to = t->next(q, a);
            if (to != kNoState) adj[q].push_back(to);
        }
    return !digraph_cycle(t->n(), adj).has_value();
}

bool is_prefix_universal(const Dfa& d) {
    MaybeDfa m = minimize(d);
    if (!m) return d.alphabet.empty();
    for (State t : m->delta_flat)
        if (t == kNoState) return false;
    return true;
}

std::vector<std::set<Sym>> incoming_labels(const Dfa& d) {
    std::vector<std::set<Sym>> lam(d.n());
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState) lam[t].insert(a);
        }
    return lam;
}

Dfa make_input_consistent(const Dfa& d) {
    auto lam = incoming_labels(d);
    bool consistent = lam[d.initial].empty();
    for (State q = 0; consistent && q < d.n(); ++q)
        if (q != d.initial && lam[q].size() > 1) consistent = false;
    if (consistent) return d;

    // copy (q, a) for every incoming label a, plus a fresh source copy of initial
    std::vector<std::vector<State>> copy_id(d.n());
    int cnt = 0;
    for (State q = 0; q < d.n(); ++q) {
        copy_id[q].assign(d.sigma(), kNoState);
        for (Sym a : lam[q]) copy_id[q][a] = cnt++;
    }
    State source = cnt++;
    Dfa out = Dfa::make(d.alphabet, cnt, source);
    auto place = [&](State q, Sym in_label) { return in_label < 0 ? source : copy_id[q][in_label]; };
    for (State q = 0; q < d.n(); ++q) {
        std::vector<Sym> labels(lam[q].begin(), lam[q].end());
        if (q == d.initial) labels.push_back(-1);
        for (Sym in : labels) {
            State id = place(q, in);
            out.final_flags[id] = d.final_flags[q];
            for (Sym a = 0; a < d.sigma(); ++a) {
                State t = d.next(q, a);
                if (t != kNoState) out.set_edge(id, a, copy_id[t][a]);
            }
        }
    }
    out.is_trimmed = d.is_trimmed;
    return out;
}

void require_minimal_trimmed(const Dfa& d, const char* op) {
    if (!d.is_trimmed) {
        auto fwd = reachable_mask(d);
        std::vector<char> f(d.final_flags.begin(), d.final_flags.end());
        auto bwd = coreachable_mask(d, f);
        for (State q = 0; q < d.n(); ++q)
            if (!fwd[q] || !bwd[q])
                throw PreconditionError(std::string(op) + ": input automaton is not trimmed");
    }
    if (!d.is_minimal) {
        MaybeDfa m = minimize(d);
        if (!m || m->n() != d.n())
            throw PreconditionError(std::string(op) + ": input automaton is not minimal");
    }
}

bool isomorphic(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet != d2.alphabet || d1.n() != d2.n()) return false;
    Dfa c1 = canonical_renumber(d1);
    Dfa c2 = canonical_renumber(d2);
    return c1.initial == c2.initial && c1.delta_flat == c2.delta_flat &&
           c1.final_flags == c2.final_flags;
}

std::optional<std::vector<int>> digraph_cycle(int n_nodes, const std::vector<std::vector<int>>& adj) {
    std::vector<uint8_t> color(n_nodes, 0); // 0 white, 1 gray, 2 black
    std::vector<int> parent(n_nodes, -1);
    for (int root = 0; root < n_nodes; ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < adj[u].size()) {
                int v = adj[u][idx++];
                if (color[v] == 0) {
                    color[v] = 1;
                    parent[v] = u;
                    stack.push_back({v, 0});
                } else if (color[v] == 1) {
                    std::vector<int> cyc{u};
                    for (int w = u; w != v; w = parent[w]) cyc.push_back(parent[w]);
                    std::reverse(cyc.begin(), cyc.end());
                    return cyc;
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::vector<char> nodes_on_cycles(int n_nodes, const std::vector<std::vector<int>>& adj) {
    // iterative Tarjan SCC
    std::vector<int> index(n_nodes, -1), low(n_nodes, 0), comp(n_nodes, -1);
    std::vector<char> on_stack(n_nodes, 0);
    std::vector<int> scc_stack;
    int next_index = 0, n_comp = 0;
    std::vector<int> comp_size;

    for (int root = 0; root < n_nodes; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<int, size_t>> call{{root, 0}};
        index[root] = low[root] = next_index++;
        scc_stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [u, idx] = call.back();
            if (idx < adj[u].size()) {
                int v = adj[u][idx++];
                if (index[v] == -1) {
                    index[v] = low[v] = next_index++;
                    scc_stack.push_back(v);
                    on_stack[v] = 1;
                    call.push_back({v, 0});
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
            } else {
                const int done = u;
                if (low[done] == index[done]) {
                    int size = 0;
                    while (true) {
                        int w = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = n_comp;
                        ++size;
                        if (w == done) break;
                    }
                    comp_size.push_back(size);
                    ++n_comp;
                }
                call.pop_back();
                if (!call.empty()) {
                    int p = call.back().first;
                    low[p] = std::min(low[p], low[done]);
                }
            }
        }
    }

    std::vector<char> result(n_nodes, 0);
    for (int u = 0; u < n_nodes; ++u) {
        if (comp_size[comp[u]] >= 2) result[u] = 1;
    }
    for (int u = 0; u < n_nodes; ++u)
        for (int v : adj[u])
            if (v == u) result[u] = 1; // self-loop
    return result;
}

std::vector<std::optional<Word>> shortest_words(const Dfa& d) {
    std::vector<std::optional<Word>> res(d.n());
    std::deque<State> bfs{d.initial};
    res[d.initial] = Word{};
    while (!bfs.empty()) {
        State q = bfs.front();
        bfs.pop_front();
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t != kNoState && !res[t]) {
                Word w = *res[q];
                w.push_back(a);
                res[t] = std::move(w);
                bfs.push_back(t);
            }
        }
    }
    return res;
}

namespace detail {

PairCycle pair_cycle_impl(const Dfa& d, const std::vector<char>& keep_mask, const Budgets&) {
    const int64_t n = d.n();
    const int64_t nn = n * n;
    auto enc = [n](State p, State q) { return static_cast<int64_t>(p) * n + q; };
    std::vector<uint8_t> color(nn, 0);
    std::vector<int64_t> parent(nn, -1);
    std::vector<Sym> parent_sym(nn, -1);

    PairCycle result;
    for (int64_t root = 0; root < nn; ++root) {
        if (!keep_mask[root] || color[root] != 0) continue;
        std::vector<std::pair<int64_t, Sym>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [u, a] = stack.back();
            if (a < d.sigma()) {
                Sym sym = a++;
                State p = static_cast<State>(u / n), q = static_cast<State>(u % n);
                State p2 = d.next(p, sym), q2 = d.next(q, sym);
                if (p2 == kNoState || q2 == kNoState) continue;
                int64_t v = enc(p2, q2);
                if (!keep_mask[v]) continue;
                if (color[v] == 0) {
                    color[v] = 1;
                    parent[v] = u;
                    parent_sym[v] = sym;
                    stack.push_back({v, 0});
                } else if (color[v] == 1) {
                    // cycle: v -> ... -> u -> v
                    result.found = true;
                    std::vector<int64_t> nodes{u};
                    std::vector<Sym> labels{sym};
                    for (int64_t w = u; w != v; w = parent[w]) {
                        labels.push_back(parent_sym[w]);
                        nodes.push_back(parent[w]);
                    }
                    std::reverse(nodes.begin(), nodes.end());
                    std::reverse(labels.begin(), labels.end());
                    for (int64_t w : nodes)
                        result.nodes.push_back({static_cast<State>(w / n), static_cast<State>(w % n)});
                    result.labels = std::move(labels);
                    return result;
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return result;
}

} // namespace detail

} // namespace wheeler
