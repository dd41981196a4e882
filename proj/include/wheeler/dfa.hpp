#ifndef WHEELER_DFA_HPP
#define WHEELER_DFA_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wheeler/common.hpp"

namespace wheeler {

// Deterministic finite automaton with a partial transition function.
// States are dense integers; symbols are indices into `alphabet`
// (declaration order is the canonical tie-breaking order everywhere).
struct Dfa {
    std::vector<std::string> alphabet;
    std::vector<std::string> state_names; // empty => synthesized "q<i>" on output
    State initial = 0;
    std::vector<State> delta_flat;        // n * sigma entries, kNoState = undefined
    std::vector<char> final_flags;

    // cached facts; false only means "unknown"
    bool is_trimmed = false;
    bool is_minimal = false;
    bool is_complete = false;

    int n() const { return static_cast<int>(final_flags.size()); }
    int sigma() const { return static_cast<int>(alphabet.size()); }

    State next(State q, Sym a) const { return delta_flat[static_cast<size_t>(q) * sigma() + a]; }
    void set_edge(State q, Sym a, State to) { delta_flat[static_cast<size_t>(q) * sigma() + a] = to; }

    bool is_final(State q) const { return final_flags[q] != 0; }

    int edge_count() const;
    std::string state_name(State q) const;
    Sym symbol_id(const std::string& token) const; // -1 if unknown

    static Dfa make(std::vector<std::string> alphabet, int n_states, State initial);
};

// nullopt stands for the automaton of the empty language (no trimmed states).
using MaybeDfa = std::optional<Dfa>;

using Word = std::vector<Sym>;

bool accepts(const Dfa& d, const Word& word);
bool accepts_tokens(const Dfa& d, const std::vector<std::string>& tokens);

// Useful-state restriction. nullopt iff the language is empty.
MaybeDfa trim(const Dfa& d);

// Totalize delta, adding at most one non-final sink.
Dfa complete(const Dfa& d);

// Complete single-state automaton of the empty language over `alphabet`.
Dfa empty_language_dfa(std::vector<std::string> alphabet);

// Minimal trimmed DFA of L(d) with canonical BFS state numbering.
MaybeDfa minimize(const Dfa& d);

// Same, also reporting where each original state went (kNoState = dropped,
// states of the completion sink are never reported).
struct MinimizeResult {
    MaybeDfa dfa;
    std::vector<State> state_map; // original state -> new state or kNoState
};
MinimizeResult minimize_mapped(const Dfa& d);

// Minimal trimmed DFA of the complement. nullopt iff L(d) = Sigma*.
MaybeDfa complement(const Dfa& d);

bool is_finite_language(const Dfa& d);

// Pref(L) = Sigma*, i.e. minimize(d) is complete.
bool is_prefix_universal(const Dfa& d);

// lambda(q) = set of symbols on incoming transitions.
std::vector<std::set<Sym>> incoming_labels(const Dfa& d);

// Split states until every non-initial state has |lambda(q)| <= 1 and the
// initial state has no incoming edges. Language preserved.
Dfa make_input_consistent(const Dfa& d);

bool isomorphic(const Dfa& d1, const Dfa& d2);

// Throws PreconditionError unless d is trimmed and minimal (verified when the
// cached flags are not set).
void require_minimal_trimmed(const Dfa& d, const char* op);

// --- graph utilities -------------------------------------------------------

// Cycle search over the off/on-diagonal product graph D^2 restricted by a
// node filter. Node encoding: p * n + q.
struct PairCycle {
    bool found = false;
    std::vector<std::pair<State, State>> nodes; // the cycle, nodes[i] -> nodes[i+1], last -> first
    std::vector<Sym> labels;                    // labels[i] drives nodes[i] -> nodes[i+1]
};

template <typename Filter>
PairCycle cycle_within(const Dfa& d, Filter keep, const Budgets& budgets = default_budgets());

// Cycle detection in an explicit digraph (adjacency lists). Returns a cycle
// as a node list, or nullopt when acyclic. Iterative.
std::optional<std::vector<int>> digraph_cycle(int n_nodes, const std::vector<std::vector<int>>& adj);

// All nodes lying on some directed cycle (SCC size >= 2 or self-loop). Iterative Tarjan.
std::vector<char> nodes_on_cycles(int n_nodes, const std::vector<std::vector<int>>& adj);

// Shortest word reaching each state (BFS, symbols tried in declaration
// order); empty optional for unreachable states.
std::vector<std::optional<Word>> shortest_words(const Dfa& d);

// Implementation of the templated cycle search ------------------------------

namespace detail {
PairCycle pair_cycle_impl(const Dfa& d, const std::vector<char>& keep_mask, const Budgets& budgets);
}

template <typename Filter>
PairCycle cycle_within(const Dfa& d, Filter keep, const Budgets& budgets) {
    const int64_t n = d.n();
    if (n * n > budgets.pair_nodes)
        throw ResourceError("cycle_within: |Q|^2 exceeds the pair-node budget");
    std::vector<char> mask(static_cast<size_t>(n * n), 0);
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            if (keep(p, q)) mask[static_cast<size_t>(p) * n + q] = 1;
    return detail::pair_cycle_impl(d, mask, budgets);
}

} // namespace wheeler

#endif
