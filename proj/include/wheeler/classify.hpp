#ifndef WHEELER_CLASSIFY_HPP
#define WHEELER_CLASSIFY_HPP

#include "wheeler/uw.hpp"

namespace wheeler {

struct SltResult {
    bool slt = true;
    std::optional<PairCycle> witness; // off-diagonal D^2 cycle when not SLT
};
// Caron's criterion: no pair of equally labeled cycles from distinct states.
SltResult is_slt(const Dfa& min_dfa);

bool is_definite(const Dfa& d);
bool is_reverse_definite(const Dfa& d);

struct PrefixIntersection {
    bool finite = false;
    std::vector<Word> words; // Pref(L) inter Pref(comp L), when finite
};
PrefixIntersection prefix_intersection_finite(const Dfa& d);

struct EwResult {
    bool possibly_ew = true;
    // witness when the necessary condition fails: three states sharing an
    // equally labeled cycle
    State p = kNoState, q = kNoState, r = kNoState;
    std::vector<Sym> gamma;
};
EwResult ew_necessary(const Dfa& min_dfa, const Budgets& budgets = default_budgets());

struct RdefDecomposition {
    std::vector<Word> f, g; // language = (F inter L) union G Sigma*
};
RdefDecomposition rdef_decomposition(const Dfa& d);

struct ClassificationReport {
    bool finite = false;
    bool prefix_universal = false;
    bool slt = false;
    bool uw = false;
    bool comp_uw = false;
    bool definite = false;
    bool reverse_definite = false;
    bool ew_possible = false;

    std::optional<UwVerdict> uw_cert;      // certificate when !uw
    std::optional<UwVerdict> comp_uw_cert; // certificate when !comp_uw
    std::optional<PairCycle> slt_cert;     // when !slt
    std::optional<EwResult> ew_cert;       // when !ew_possible
    std::optional<RdefDecomposition> rdef_cert; // when reverse_definite
};

// Runs every predicate on minimize(dfa); raises std::logic_error if the
// report would violate the class-theory invariants.
ClassificationReport classify(const Dfa& d);

} // namespace wheeler

#endif
