#include "wheeler/classify.hpp"

#include <algorithm>
#include <deque>

#include "wheeler/oracle.hpp"

namespace wheeler {

SltResult is_slt(const Dfa& d) {
    require_minimal_trimmed(d, "is_slt");
    PairCycle cyc = cycle_within(d, [](State p, State q) { return p != q; });
    if (!cyc.found) return {true, std::nullopt};
    return {false, std::move(cyc)};
}

bool is_definite(const Dfa& d) {
    MaybeDfa m = minimize(d);
    if (!m || is_finite_language(*m)) return true;
    return decide_uw(*m).in_uw && is_prefix_universal(*m);
}

bool is_reverse_definite(const Dfa& d) {
    MaybeDfa m = minimize(d);
    if (!m || is_finite_language(*m)) return true;
    MaybeDfa cm = complement(*m);
    if (m->sigma() == 1) return !cm || is_finite_language(*cm); // unary: finite or cofinite
    if (is_prefix_universal(*m)) return !cm || is_finite_language(*cm);
    return decide_uw(*m).in_uw && cm && decide_uw(*cm).in_uw;
}

PrefixIntersection prefix_intersection_finite(const Dfa& d) {
    MaybeDfa m = minimize(d);
    Dfa c = m ? complete(*m) : empty_language_dfa(d.alphabet);

    // co-reachability to finals and to non-finals
    std::vector<std::vector<int>> radj(c.n());
    for (State q = 0; q < c.n(); ++q)
        for (Sym a = 0; a < c.sigma(); ++a) radj[c.next(q, a)].push_back(q);
    auto co_reach = [&](auto pred) {
        std::vector<char> seen(c.n(), 0);
        std::deque<State> bfs;
        for (State q = 0; q < c.n(); ++q)
            if (pred(q)) {
                seen[q] = 1;
                bfs.push_back(q);
            }
        while (!bfs.empty()) {
            State q = bfs.front();
            bfs.pop_front();
            for (State p : radj[q])
                if (!seen[p]) {
                    seen[p] = 1;
                    bfs.push_back(p);
                }
        }
        return seen;
    };
    auto to_final = co_reach([&](State q) { return c.is_final(q); });
    auto to_nonfinal = co_reach([&](State q) { return !c.is_final(q); });
    std::vector<char> q3(c.n(), 0);
    for (State q = 0; q < c.n(); ++q) q3[q] = to_final[q] && to_nonfinal[q];

    std::vector<std::vector<int>> adj(c.n());
    for (State q = 0; q < c.n(); ++q) {
        if (!q3[q]) continue;
        for (Sym a = 0; a < c.sigma(); ++a) {
            State t = c.next(q, a);
            if (q3[t]) adj[q].push_back(t);
        }
    }
    if (digraph_cycle(c.n(), adj)) return {false, {}};

    PrefixIntersection res{true, {}};
    if (!q3[c.initial]) return res;
    Word cur;
    int64_t guard = 1'000'000;
    auto dfs = [&](auto&& self, State q) -> void {
        if (--guard < 0) throw ResourceError("prefix_intersection_finite: enumeration guard exceeded");
        res.words.push_back(cur);
        for (Sym a = 0; a < c.sigma(); ++a) {
            State t = c.next(q, a);
            if (!q3[t]) continue;
            cur.push_back(a);
            self(self, t);
            cur.pop_back();
        }
    };
    dfs(dfs, c.initial);
    return res;
}

EwResult ew_necessary(const Dfa& d, const Budgets& budgets) {
    require_minimal_trimmed(d, "ew_necessary");
    const int64_t n = d.n();
    if (n * n * n > budgets.triple_nodes)
        throw ResourceError("ew_necessary: |Q|^3 = " + std::to_string(n * n * n) +
                            " exceeds the triple-node budget");
    const int64_t nnn = n * n * n;
    std::vector<uint8_t> color(nnn, 0);
    std::vector<int64_t> parent(nnn, -1);
    std::vector<Sym> parent_sym(nnn, -1);
    auto distinct = [](State p, State q, State r) { return p != q && p != r && q != r; };
    auto enc = [n](State p, State q, State r) { return (static_cast<int64_t>(p) * n + q) * n + r; };

    for (int64_t root = 0; root < nnn; ++root) {
        State rp = static_cast<State>(root / (n * n)), rq = static_cast<State>((root / n) % n),
              rr = static_cast<State>(root % n);
        if (!distinct(rp, rq, rr) || color[root] != 0) continue;
        std::vector<std::pair<int64_t, Sym>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [u, a] = stack.back();
            if (a < d.sigma()) {
                Sym c = a++;
                State p = static_cast<State>(u / (n * n)), q = static_cast<State>((u / n) % n),
                      r = static_cast<State>(u % n);
                State p2 = d.next(p, c), q2 = d.next(q, c), r2 = d.next(r, c);
                if (p2 == kNoState || q2 == kNoState || r2 == kNoState || !distinct(p2, q2, r2))
                    continue;
                int64_t v = enc(p2, q2, r2);
                if (color[v] == 0) {
                    color[v] = 1;
                    parent[v] = u;
                    parent_sym[v] = c;
                    stack.push_back({v, 0});
                } else if (color[v] == 1) {
                    // cycle v -> ... -> u -> v
                    EwResult res;
                    res.possibly_ew = false;
                    res.p = static_cast<State>(v / (n * n));
                    res.q = static_cast<State>((v / n) % n);
                    res.r = static_cast<State>(v % n);
                    std::vector<Sym> gamma{c};
                    for (int64_t w = u; w != v; w = parent[w]) gamma.push_back(parent_sym[w]);
                    std::reverse(gamma.begin(), gamma.end());
                    res.gamma = std::move(gamma);
                    return res;
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

namespace {

std::vector<Word> all_words_of_length(int sigma, int len) {
    std::vector<Word> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<Word> nxt;
        nxt.reserve(out.size() * sigma);
        for (const Word& w : out)
            for (Sym a = 0; a < sigma; ++a) {
                Word e = w;
                e.push_back(a);
                nxt.push_back(std::move(e));
            }
        out.swap(nxt);
        if (out.size() > 2'000'000) throw ResourceError("rdef_decomposition: Sigma^k enumeration too large");
    }
    return out;
}

} // namespace

RdefDecomposition rdef_decomposition(const Dfa& d) {
    if (!is_reverse_definite(d)) throw PreconditionError("rdef_decomposition: not reverse definite");
    RdefDecomposition out;
    MaybeDfa m = minimize(d);
    std::vector<Word> f_in_l; // the F inter L part fed to the reconstruction

    if (!m) {
        // empty language: F = L = {}, G = {}
    } else if (is_finite_language(*m)) {
        out.f = enumerate_finite_language(*m);
        f_in_l = out.f;
    } else if (MaybeDfa cm = complement(*m); !cm || is_finite_language(*cm)) {
        // cofinite: least k with Sigma^{>=k} subset of L
        int k = 0;
        if (cm)
            for (const Word& w : enumerate_finite_language(*cm))
                k = std::max(k, static_cast<int>(w.size()) + 1);
        for (int len = 0; len < k; ++len)
            for (Word& w : all_words_of_length(m->sigma(), len))
                if (accepts(*m, w)) out.f.push_back(std::move(w));
        out.g = all_words_of_length(m->sigma(), k);
        f_in_l = out.f;
    } else {
        PrefixIntersection pi = prefix_intersection_finite(*m);
        if (!pi.finite)
            throw std::logic_error("rdef_decomposition: RDEF language with infinite prefix intersection");
        out.f = pi.words;
        Dfa cm2 = *complement(*m);
        auto in_prefixes = [](const Dfa& a, const Word& w) {
            State q = a.initial;
            for (Sym x : w) {
                q = a.next(q, x);
                if (q == kNoState) return false;
            }
            return true;
        };
        for (const Word& alpha : out.f) {
            if (accepts(*m, alpha)) f_in_l.push_back(alpha);
            for (Sym x = 0; x < m->sigma(); ++x) {
                Word ax = alpha;
                ax.push_back(x);
                if (in_prefixes(*m, ax) && !in_prefixes(cm2, ax)) out.g.push_back(std::move(ax));
            }
        }
    }

    // postcondition: (F inter L) union G Sigma* equals the input language
    MaybeDfa rebuilt = dfa_from_decomposition(f_in_l, out.g, d.alphabet);
    if (!language_empty_equal(rebuilt, m, d.alphabet))
        throw std::logic_error("rdef_decomposition: reconstruction does not match the language");
    return out;
}

ClassificationReport classify(const Dfa& d) {
    ClassificationReport r;
    MaybeDfa m = minimize(d);
    if (!m) {
        r.finite = true;
        r.prefix_universal = d.alphabet.empty();
        r.slt = r.uw = r.comp_uw = true;
        r.definite = r.reverse_definite = true;
        r.ew_possible = true;
        r.rdef_cert = RdefDecomposition{};
        return r;
    }

    r.finite = is_finite_language(*m);
    r.prefix_universal = is_prefix_universal(*m);
    SltResult slt = is_slt(*m);
    r.slt = slt.slt;
    if (!slt.slt) r.slt_cert = std::move(slt.witness);
    UwVerdict uw = decide_uw(*m);
    r.uw = uw.in_uw;
    if (!uw.in_uw) r.uw_cert = std::move(uw);
    MaybeDfa cm = complement(*m);
    if (!cm) {
        r.comp_uw = true;
    } else {
        UwVerdict cu = decide_uw(*cm);
        r.comp_uw = cu.in_uw;
        if (!cu.in_uw) r.comp_uw_cert = std::move(cu);
    }
    r.definite = r.finite || (r.uw && r.prefix_universal);
    if (r.finite) {
        r.reverse_definite = true;
    } else if (m->sigma() == 1) {
        r.reverse_definite = !cm || is_finite_language(*cm);
    } else if (r.prefix_universal) {
        r.reverse_definite = !cm || is_finite_language(*cm);
    } else {
        r.reverse_definite = r.uw && r.comp_uw;
    }
    EwResult ew = ew_necessary(*m);
    r.ew_possible = ew.possibly_ew;
    if (!ew.possibly_ew) r.ew_cert = std::move(ew);
    if (r.reverse_definite) r.rdef_cert = rdef_decomposition(d);

    // class-theory invariants — any failure is an implementation bug
    if ((r.uw && r.comp_uw) != (r.definite || r.reverse_definite))
        throw std::logic_error("classify: UW(L) and UW(comp L) must equal DEF or RDEF");
    if (r.slt && !r.uw) throw std::logic_error("classify: SLT must imply UW");
    if (r.prefix_universal && r.uw && !r.comp_uw)
        throw std::logic_error("classify: prefix-universal UW language must have UW complement");
    if (r.finite && !(r.definite && r.reverse_definite && r.slt && r.uw))
        throw std::logic_error("classify: finite language must be DEF, RDEF, SLT and UW");
    return r;
}

} // namespace wheeler
