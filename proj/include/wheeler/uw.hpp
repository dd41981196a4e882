#ifndef WHEELER_UW_HPP
#define WHEELER_UW_HPP

#include <unordered_map>

#include "wheeler/order_engine.hpp"

namespace wheeler {

// lambda'(q): the at most two smallest incoming labels by declaration rank.
using LambdaPrime = std::vector<std::vector<Sym>>;
LambdaPrime lambda_prime(const Dfa& trimmed);

struct Quad {
    State p, q;
    ExtSym a, b;
};

// Base cases of Algorithm 1 (materialized; guarded by the pair-node budget).
std::vector<Quad> seed_quadruples(const Dfa& min_dfa, const LambdaPrime& lp,
                                  const Budgets& budgets = default_budgets());

// T[p,q]: at most two distinct ExtSym pairs per ordered off-diagonal state
// pair. Dense packed storage when the automaton is small-alphabet and the
// pair table fits the budget, otherwise a sparse hash map.
class TTable {
  public:
    TTable(int n_states, int sigma, const Budgets& budgets);

    int count(State p, State q) const;
    bool contains(State p, State q, ExtPair e) const;
    // false when already present or the cell is full
    bool store(State p, State q, ExtPair e);
    std::vector<ExtPair> entries(State p, State q) const;
    bool dense() const { return !cells_.empty() || sparse_.empty(); }

  private:
    int64_t key(State p, State q) const { return static_cast<int64_t>(p) * n_ + q; }
    uint32_t encode(ExtPair e) const;
    ExtPair decode(uint32_t code) const;

    int n_;
    int sigma_;
    // dense: 2-bit count + two packed entries per pair
    std::vector<uint16_t> cells_;
    int bits_per_ext_ = 0;
    struct SparseCell {
        uint8_t cnt = 0;
        ExtPair e[2];
    };
    std::unordered_map<int64_t, SparseCell> sparse_;
};

enum class PopOrder { FIFO, LIFO, Random };

struct PropagationStats {
    int64_t seeds_processed = 0;
    int64_t pushes = 0;
    int64_t pops = 0;
    int64_t stores = 0;
    int64_t work() const { return seeds_processed + pushes + pops; }
};

// Algorithm 1 propagation phase over an explicit seed list.
TTable propagate(const Dfa& min_dfa, const std::vector<Quad>& seeds,
                 PopOrder discipline = PopOrder::FIFO, PropagationStats* stats = nullptr,
                 const Budgets& budgets = default_budgets());

// Same fixpoint, generating the base cases on the fly (no seed vector is
// materialized); used by decide_uw so that large benchmark instances stay
// within memory.
TTable propagate_streaming(const Dfa& min_dfa, PropagationStats* stats = nullptr,
                           const Budgets& budgets = default_budgets(),
                           uint64_t random_pop_seed = 0, PopOrder discipline = PopOrder::FIFO);

// Def 4 graph: V = pairs with |T| >= 2, E = D^2 edges inside V.
struct UwGraph {
    std::vector<std::pair<State, State>> v;
    std::vector<std::pair<int, int>> e; // indices into v
};
UwGraph uw_graph(const Dfa& min_dfa, const TTable& t, const Budgets& budgets = default_budgets());

struct UwVerdict {
    bool in_uw = true;
    // certificate when not UW:
    State p = kNoState, q = kNoState;
    std::vector<std::pair<State, State>> cycle;
    std::vector<Sym> cycle_labels;
    ExtPair witness1, witness2; // the two T[p,q] entries (p-smaller / q-smaller direction)
    std::optional<AlphabetOrder> violating_order;
    PropagationStats stats;
};

UwVerdict decide_uw(const Dfa& min_dfa, const Budgets& budgets = default_budgets());

bool intertwined(const Dfa& min_dfa, State p, State q, const Budgets& budgets = default_budgets());

} // namespace wheeler

#endif
