#include "wheeler/order.hpp"

#include <algorithm>
#include <sstream>

namespace wheeler {

AlphabetOrder AlphabetOrder::from_perm(std::vector<Sym> perm) {
    AlphabetOrder o;
    o.rank.assign(perm.size(), -1);
    for (size_t k = 0; k < perm.size(); ++k) {
        Sym s = perm[k];
        if (s < 0 || s >= static_cast<Sym>(perm.size()) || o.rank[s] != -1)
            throw InputError("alphabet order is not a permutation");
        o.rank[s] = static_cast<int>(k);
    }
    o.perm = std::move(perm);
    return o;
}

AlphabetOrder AlphabetOrder::declaration(int sigma) {
    std::vector<Sym> p(sigma);
    for (int i = 0; i < sigma; ++i) p[i] = i;
    return from_perm(std::move(p));
}

AlphabetOrder AlphabetOrder::parse(const std::string& text, const std::vector<std::string>& alphabet) {
    std::vector<Sym> perm;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InputError("empty symbol in order '" + text + "'");
        Sym id = -1;
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == tok) id = static_cast<Sym>(i);
        if (id < 0) throw InputError("order symbol '" + tok + "' is not in the alphabet");
        perm.push_back(id);
    }
    if (perm.size() != alphabet.size())
        throw InputError("order must list every alphabet symbol exactly once");
    return from_perm(std::move(perm));
}

std::string AlphabetOrder::describe(const std::vector<std::string>& alphabet) const {
    std::string out;
    for (size_t k = 0; k < perm.size(); ++k) {
        if (k) out += ",";
        out += alphabet[perm[k]];
    }
    return out;
}

Cmp colex_compare(const Word& w1, const Word& w2, const AlphabetOrder& order) {
    size_t i = w1.size(), j = w2.size();
    while (i > 0 && j > 0) {
        Sym a = w1[i - 1], b = w2[j - 1];
        if (a < 0 || a >= order.size() || b < 0 || b >= order.size())
            throw InputError("colex_compare: symbol outside the ordered alphabet");
        if (a != b) return order.less(a, b) ? Cmp::LT : Cmp::GT;
        --i;
        --j;
    }
    if (i == 0 && j == 0) return Cmp::EQ;
    return i == 0 ? Cmp::LT : Cmp::GT; // the proper suffix is smaller
}

std::string ext_symbol_token(ExtSym e, const std::vector<std::string>& alphabet) {
    if (e == kSuf) return "SUF";
    if (e == kPre) return "PRE";
    return alphabet.at(e);
}

AlphabetOrder build_violating_order(const ExtPair& w1, const ExtPair& w2, int sigma) {
    auto well_formed = [](const ExtPair& w) {
        if (is_sentinel(w.a) || is_sentinel(w.b)) return w.a == w.b;
        return w.a != w.b;
    };
    if (w1 == w2 || !well_formed(w1) || !well_formed(w2))
        throw PreconditionError("build_violating_order: malformed witness pairs");

    // constraints first ≺ second
    std::vector<std::pair<Sym, Sym>> cons;
    if (!is_sentinel(w1.a)) cons.push_back({w1.a, w1.b});
    if (!is_sentinel(w2.a)) cons.push_back({w2.b, w2.a});
    for (auto& [x, y] : cons)
        for (auto& [u, v] : cons)
            if (x == v && y == u) throw std::logic_error("build_violating_order: contradictory constraints");

    std::vector<int> blockers(sigma, 0); // how many unplaced symbols must precede
    std::vector<char> has_out(sigma, 0);
    for (auto [x, y] : cons) {
        ++blockers[y];
        has_out[x] = 1;
    }
    std::vector<char> placed(sigma, 0);
    std::vector<Sym> perm;
    while (static_cast<int>(perm.size()) < sigma) {
        Sym best = -1;
        for (Sym s = 0; s < sigma; ++s) {
            if (placed[s] || blockers[s] > 0) continue;
            if (best == -1 || (has_out[s] && !has_out[best])) best = s;
        }
        if (best == -1) throw std::logic_error("build_violating_order: constraint cycle");
        placed[best] = 1;
        perm.push_back(best);
        for (auto [x, y] : cons)
            if (x == best) --blockers[y];
    }
    return AlphabetOrder::from_perm(std::move(perm));
}

} // namespace wheeler
