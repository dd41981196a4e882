#ifndef WHEELER_ORACLE_HPP
#define WHEELER_ORACLE_HPP

#include <map>
#include <set>

#include "wheeler/order_engine.hpp"

namespace wheeler {

// Brute-force reference implementations. Everything here is deliberately
// naive; the fast paths are tested against these.

// All |Sigma|! orders, lexicographic in declaration rank. Guard |Sigma| <= 8.
std::vector<AlphabetOrder> all_orders(int sigma);

// UW by definition: Wheeler for every order.
bool brute_uw(const Dfa& min_dfa);

// EW by definition (small alphabets only): Wheeler for some order.
bool exact_ew_small(const Dfa& min_dfa);

// LT by definition, via co-lex extremal words of bounded length per state.
struct BruteLt {
    int n = 0;
    std::vector<char> lt;
    bool get(State p, State q) const { return lt[static_cast<size_t>(p) * n + q] != 0; }
};
BruteLt brute_lt(const Dfa& min_dfa, const AlphabetOrder& order, int length_bound = -1);

// Eq (1) P-table without Algorithm 1's two-entry cap.
using ExactPTable = std::map<std::pair<State, State>, std::set<ExtPair>>;
ExactPTable exact_p_table(const Dfa& min_dfa, const Budgets& budgets = default_budgets());

// p and q intertwined under some order, by definition.
bool brute_intertwined(const Dfa& min_dfa, State p, State q);

struct RandomDfaSpec {
    uint64_t seed = 0;
    int max_states = 6;
    int alphabet_size = 3;
    double transition_density = 0.8;
    double final_probability = 0.4;
};
// Deterministic per spec; always minimal and trimmed, never the empty language.
Dfa random_minimal_dfa(const RandomDfaSpec& spec);

// Classical structural characterizations (not from this paper; validated by
// agreement tests): RDEF iff the complete minimal automaton is acyclic after
// removing its <= 2 absorbing states; DEF = RDEF of the reversal.
bool structural_rdef(const Dfa& d);
bool structural_def(const Dfa& d); // guard: |Q| of minimize(d) <= 12

bool language_equal(const Dfa& d1, const Dfa& d2);
bool language_empty_equal(const MaybeDfa& d1, const MaybeDfa& d2, const std::vector<std::string>& alphabet);

// Finite-language plumbing used by decomposition checks.
std::vector<Word> enumerate_finite_language(const Dfa& d, int64_t word_guard = 1'000'000);
// DFA of (set of full words F) union (G concatenated with Sigma*).
MaybeDfa dfa_from_decomposition(const std::vector<Word>& f, const std::vector<Word>& g,
                                std::vector<std::string> alphabet);

} // namespace wheeler

#endif
