#include "wheeler/order_engine.hpp"

#include <algorithm>
#include <deque>

namespace wheeler {

namespace {

// per-state min/max incoming label by order rank, -1 when lambda(q) is empty
struct MinMaxLabels {
    std::vector<Sym> min_label, max_label;
};

MinMaxLabels min_max_in_labels(const Dfa& d, const AlphabetOrder& order) {
    MinMaxLabels mm{std::vector<Sym>(d.n(), -1), std::vector<Sym>(d.n(), -1)};
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t == kNoState) continue;
            if (mm.min_label[t] == -1 || order.less(a, mm.min_label[t])) mm.min_label[t] = a;
            if (mm.max_label[t] == -1 || order.less(mm.max_label[t], a)) mm.max_label[t] = a;
        }
    return mm;
}

} // namespace

LtRelation lt_fixpoint(const Dfa& d, const AlphabetOrder& order) {
    const int n = d.n();
    LtRelation lt;
    lt.n = n;
    lt.table.assign(static_cast<size_t>(n) * n, {});
    auto idx = [n](State p, State q) { return static_cast<size_t>(p) * n + q; };

    std::deque<int64_t> work;
    auto seed = [&](State p, State q, LtRelation::Back back) {
        auto& cell = lt.table[idx(p, q)];
        if (cell.reason != LtRelation::kNone) return;
        cell = back;
        work.push_back(static_cast<int64_t>(idx(p, q)));
    };

    auto mm = min_max_in_labels(d, order);
    for (State q = 0; q < n; ++q)
        if (q != d.initial) seed(d.initial, q, {LtRelation::kSourceSeed, -1, -1, -1, -1});
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) {
            if (p == q || mm.min_label[p] == -1 || mm.max_label[q] == -1) continue;
            if (order.less(mm.min_label[p], mm.max_label[q]))
                seed(p, q, {LtRelation::kLabelSeed, mm.min_label[p], mm.max_label[q], -1, -1});
        }

    while (!work.empty()) {
        int64_t cur = work.front();
        work.pop_front();
        State p = static_cast<State>(cur / n), q = static_cast<State>(cur % n);
        for (Sym c = 0; c < d.sigma(); ++c) {
            State p2 = d.next(p, c), q2 = d.next(q, c);
            if (p2 == kNoState || q2 == kNoState || p2 == q2) continue;
            seed(p2, q2, {LtRelation::kPropagated, -1, -1, c, cur});
        }
    }
    return lt;
}

LtRelation lt_relation(const Dfa& min_dfa, const AlphabetOrder& order) {
    require_minimal_trimmed(min_dfa, "lt_relation");
    return lt_fixpoint(min_dfa, order);
}

std::pair<Word, Word> lt_witness_words(const Dfa& d, const LtRelation& lt, State p, State q) {
    const int n = lt.n;
    auto idx = [n](State a, State b) { return static_cast<size_t>(a) * n + b; };
    if (lt.table[idx(p, q)].reason == LtRelation::kNone)
        throw PreconditionError("lt_witness_words: LT[p,q] does not hold");

    // unwind the derivation to a seed, collecting propagation symbols
    Word tail;
    int64_t cur = static_cast<int64_t>(idx(p, q));
    while (lt.table[cur].reason == LtRelation::kPropagated) {
        tail.push_back(lt.table[cur].via);
        cur = lt.table[cur].from;
    }
    std::reverse(tail.begin(), tail.end());
    State p0 = static_cast<State>(cur / n), q0 = static_cast<State>(cur % n);

    auto sw = shortest_words(d);
    auto word_ending_with = [&](State target, Sym a) {
        for (State x = 0; x < d.n(); ++x)
            if (d.next(x, a) == target && sw[x]) {
                Word w = *sw[x];
                w.push_back(a);
                return w;
            }
        throw std::logic_error("lt_witness_words: no predecessor for recorded seed label");
    };

    Word alpha, beta;
    const auto& back = lt.table[cur];
    if (back.reason == LtRelation::kSourceSeed) {
        alpha = {};
        if (!sw[q0]) throw std::logic_error("lt_witness_words: seed state unreachable");
        beta = *sw[q0];
        if (beta.empty()) {
            // I_q0 also contains non-empty words (q0 != s has incoming edges);
            // pick one so that alpha is a proper suffix.
            auto lam = incoming_labels(d);
            beta = word_ending_with(q0, *lam[q0].begin());
        }
    } else {
        alpha = word_ending_with(p0, back.a);
        beta = word_ending_with(q0, back.b);
    }
    alpha.insert(alpha.end(), tail.begin(), tail.end());
    beta.insert(beta.end(), tail.begin(), tail.end());
    return {alpha, beta};
}

std::string AxiomCheck::describe(const Dfa& d) const {
    switch (kind) {
        case Ok: return "ok";
        case SourceNotMin: return "source state is not the minimum of the order";
        case SourceHasIncoming: return "source state has incoming transitions";
        case NotInputConsistent: return "automaton is not input consistent";
        case W1:
            return "W1 violated by " + d.state_name(e1.from) + "-" + d.alphabet[e1.sym] + "->" +
                   d.state_name(e1.to) + " and " + d.state_name(e2.from) + "-" + d.alphabet[e2.sym] +
                   "->" + d.state_name(e2.to);
        case W2:
            return "W2 violated by " + d.state_name(e1.from) + "-" + d.alphabet[e1.sym] + "->" +
                   d.state_name(e1.to) + " and " + d.state_name(e2.from) + "-" + d.alphabet[e2.sym] +
                   "->" + d.state_name(e2.to);
    }
    return "?";
}

AxiomCheck validate_wheeler_axioms(const Dfa& d, const std::vector<State>& state_order,
                                   const AlphabetOrder& order) {
    const int n = d.n();
    if (static_cast<int>(state_order.size()) != n)
        throw InputError("state order must list every state exactly once");
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        State q = state_order[k];
        if (q < 0 || q >= n || pos[q] != -1) throw InputError("state order is not a permutation");
        pos[q] = k;
    }

    if (pos[d.initial] != 0) return {AxiomCheck::SourceNotMin};
    auto lam = incoming_labels(d);
    if (!lam[d.initial].empty()) return {AxiomCheck::SourceHasIncoming};
    for (State q = 0; q < n; ++q)
        if (q != d.initial && lam[q].size() > 1) return {AxiomCheck::NotInputConsistent};

    std::vector<EdgeRef> edges;
    for (State p = 0; p < n; ++p)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(p, a);
            if (t != kNoState) edges.push_back({p, a, t});
        }
    for (const auto& e1 : edges)
        for (const auto& e2 : edges) {
            if (order.less(e1.sym, e2.sym) && !(pos[e1.to] < pos[e2.to]))
                return {AxiomCheck::W1, e1, e2};
            if (e1.sym == e2.sym && pos[e1.from] < pos[e2.from] && e1.to != e2.to &&
                !(pos[e1.to] < pos[e2.to]))
                return {AxiomCheck::W2, e1, e2};
        }
    return {AxiomCheck::Ok};
}

WheelerResult is_wheeler_language(const Dfa& min_dfa, const AlphabetOrder& order) {
    require_minimal_trimmed(min_dfa, "is_wheeler_language");
    LtRelation lt = lt_fixpoint(min_dfa, order);
    auto filter = [&](State p, State q) { return p != q && lt.get(p, q) && lt.get(q, p); };
    PairCycle cyc = cycle_within(min_dfa, filter);
    if (!cyc.found) return {true, std::nullopt};

    WheelerViolation v;
    v.p = cyc.nodes.front().first;
    v.q = cyc.nodes.front().second;
    v.cycle = cyc.nodes;
    v.cycle_labels = cyc.labels;
    std::tie(v.alpha, v.beta) = lt_witness_words(min_dfa, lt, v.p, v.q);
    std::tie(v.beta2, v.alpha2) = lt_witness_words(min_dfa, lt, v.q, v.p);
    return {false, std::move(v)};
}

ColexOrderResult automaton_colex_order(const Dfa& d, const AlphabetOrder& order) {
    MaybeDfa t = trim(d);
    if (!t || t->n() != d.n()) throw PreconditionError("automaton_colex_order: input is not trimmed");
    auto lam = incoming_labels(d);
    if (!lam[d.initial].empty())
        throw PreconditionError("automaton_colex_order: source has incoming edges");
    for (State q = 0; q < d.n(); ++q)
        if (q != d.initial && lam[q].size() > 1)
            throw PreconditionError("automaton_colex_order: input is not input consistent");

    LtRelation lt = lt_fixpoint(d, order);
    const int n = d.n();
    for (State p = 0; p < n; ++p)
        for (State q = p + 1; q < n; ++q) {
            if (lt.get(p, q) && lt.get(q, p)) return IncomparablePair{p, q};
            if (!lt.get(p, q) && !lt.get(q, p))
                throw std::logic_error("automaton_colex_order: incomparable pair without witnesses");
        }
    // total: position of q = number of states strictly below it
    std::vector<State> states(n, kNoState);
    for (State q = 0; q < n; ++q) {
        int below = 0;
        for (State p = 0; p < n; ++p)
            if (p != q && lt.get(p, q)) ++below;
        if (states[below] != kNoState)
            throw std::logic_error("automaton_colex_order: LT relation is not a strict total order");
        states[below] = q;
    }
    return TotalStateOrder{std::move(states)};
}

} // namespace wheeler
