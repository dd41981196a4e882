#ifndef WHEELER_ORDER_ENGINE_HPP
#define WHEELER_ORDER_ENGINE_HPP

#include <variant>

#include "wheeler/order.hpp"

namespace wheeler {

// One-directional half of the intertwined relation for a fixed order:
// LT[p,q] <=> exists alpha in I_p, beta in I_q with alpha < beta.
// Back-links record how each entry was derived so word witnesses can be
// reconstructed.
struct LtRelation {
    enum Reason : int8_t { kNone = 0, kSourceSeed, kLabelSeed, kPropagated };
    struct Back {
        Reason reason = kNone;
        Sym a = -1, b = -1;  // label seed letters
        Sym via = -1;        // propagation symbol
        int64_t from = -1;   // predecessor pair index for kPropagated
    };
    int n = 0;
    std::vector<Back> table; // n*n, diagonal unused

    bool get(State p, State q) const { return table[static_cast<size_t>(p) * n + q].reason != kNone; }
};

// Fixpoint without any minimality requirement (used by automaton_colex_order).
LtRelation lt_fixpoint(const Dfa& trimmed, const AlphabetOrder& order);

// Public operation: requires a minimal trimmed DFA.
LtRelation lt_relation(const Dfa& min_dfa, const AlphabetOrder& order);

// Word witnesses (alpha into p, beta into q, alpha < beta) for a set LT entry.
std::pair<Word, Word> lt_witness_words(const Dfa& d, const LtRelation& lt, State p, State q);

// --- Wheeler axiom validation (Definition 1) --------------------------------

struct EdgeRef {
    State from;
    Sym sym;
    State to;
};

struct AxiomCheck {
    enum Kind { Ok, SourceNotMin, SourceHasIncoming, NotInputConsistent, W1, W2 } kind = Ok;
    EdgeRef e1{}, e2{}; // offending edges for W1/W2
    bool ok() const { return kind == Ok; }
    std::string describe(const Dfa& d) const;
};

// state_order lists the states from smallest to largest.
AxiomCheck validate_wheeler_axioms(const Dfa& trimmed, const std::vector<State>& state_order,
                                   const AlphabetOrder& order);

// --- language-level check for a fixed order ---------------------------------

struct WheelerViolation {
    State p = kNoState, q = kNoState;                  // intertwined pair on the cycle
    std::vector<std::pair<State, State>> cycle;        // D^2 cycle through (p,q)
    std::vector<Sym> cycle_labels;
    Word alpha, beta;                                  // alpha in I_p, beta in I_q, alpha < beta
    Word beta2, alpha2;                                // beta2 in I_q, alpha2 in I_p, beta2 < alpha2
};

struct WheelerResult {
    bool in_wh = true;
    std::optional<WheelerViolation> violation;
};

WheelerResult is_wheeler_language(const Dfa& min_dfa, const AlphabetOrder& order);

// --- automaton-level co-lex order <=_D ---------------------------------------

struct TotalStateOrder {
    std::vector<State> states; // smallest first
};
struct IncomparablePair {
    State p, q;
};
using ColexOrderResult = std::variant<TotalStateOrder, IncomparablePair>;

// Preconditions: trimmed, input consistent, initial without incoming edges.
// Violations raise PreconditionError naming the kind.
ColexOrderResult automaton_colex_order(const Dfa& d, const AlphabetOrder& order);

} // namespace wheeler

#endif
