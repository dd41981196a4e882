#ifndef WHEELER_OV_HPP
#define WHEELER_OV_HPP

#include "wheeler/uw.hpp"

namespace wheeler {

struct OvInstance {
    int n_vecs = 0; // N
    int dim = 0;    // d
    std::vector<std::vector<uint8_t>> a, b;
};

enum class OvMode { PlantedYes, PlantedNo, Random };

OvInstance gen_ov(int n_vecs, int dim, uint64_t seed, OvMode mode);
bool solve_ov_brute(const OvInstance& inst);

std::string serialize_ov(const OvInstance& inst);
OvInstance parse_ov(const std::string& text);

struct ReductionOutput {
    Dfa dfa;                    // minimal; alphabet {#, 0, 1}
    std::vector<State> a_nodes; // designated a-hat states
    std::vector<State> b_nodes; // designated b-hat states
};

// OV -> DFA reduction. Distinct states share an equally labeled cycle exactly
// when they are a designated pair {a_i, b_j} with orthogonal vectors, and the
// designated states carry the 000/110 resp. 010 entry suffixes, so
// decide_uw(dfa) = NotUW <=> the instance has an orthogonal pair.
ReductionOutput ov_to_dfa(const OvInstance& inst);

struct ReductionReport {
    bool c1 = false; // minimal for its language
    bool c2 = false; // D^2 cycles exactly through designated orthogonal pairs
    bool c3 = false; // entry-suffix reachability (000/110 and 010)
    bool c4 = false; // decide_uw <=> brute OV
    std::string notes;
    bool all() const { return c1 && c2 && c3 && c4; }
};
ReductionReport verify_reduction(const ReductionOutput& out, const OvInstance& inst);

struct BenchRecord {
    int n_vecs = 0, dim = 0;
    uint64_t seed = 0;
    int n_states = 0;
    int64_t m_edges = 0;
    std::string verdict; // "InUW" / "NotUW" / "resource-error"
    double seconds = 0;
    int64_t work = 0; // propagation work counter
};

struct GrowthReport {
    double slope = 0; // least-squares log(time) vs log(m)
    int points = 0;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    GrowthReport growth;
};

BenchResult bench(const std::vector<std::pair<int, int>>& sizes, int reps, uint64_t seed,
                  int workers = 1, const Budgets& budgets = default_budgets());

std::string bench_csv(const BenchResult& result);

} // namespace wheeler

#endif
