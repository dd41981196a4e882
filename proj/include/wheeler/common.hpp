#ifndef WHEELER_COMMON_HPP
#define WHEELER_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wheeler {

using State = int32_t;
using Sym = int32_t;

inline constexpr State kNoState = -1;

// Bad user-facing input (unknown symbols, malformed files, bad CLI args).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable size/memory budget would be exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct Budgets {
    // Maximum number of product-automaton pair nodes that may be materialized
    // (tables, in-degree arrays). Raise explicitly for large benchmark runs.
    int64_t pair_nodes = 100'000'000;
    // Maximum number of triple nodes for the cubic-time check.
    int64_t triple_nodes = 10'000'000;
};

inline const Budgets& default_budgets() {
    static const Budgets b{};
    return b;
}

} // namespace wheeler

#endif
