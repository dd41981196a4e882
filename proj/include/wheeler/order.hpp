#ifndef WHEELER_ORDER_HPP
#define WHEELER_ORDER_HPP

#include <string>
#include <vector>

#include "wheeler/dfa.hpp"

namespace wheeler {

// Total order on the alphabet. perm[k] = symbol id at rank k.
struct AlphabetOrder {
    std::vector<Sym> perm;
    std::vector<int> rank; // rank[sym] = position in perm

    static AlphabetOrder from_perm(std::vector<Sym> perm);
    // declaration order a0 < a1 < ...
    static AlphabetOrder declaration(int sigma);
    // parse "a,d,c,f" against the alphabet; must cover it exactly
    static AlphabetOrder parse(const std::string& text, const std::vector<std::string>& alphabet);

    int size() const { return static_cast<int>(perm.size()); }
    bool less(Sym a, Sym b) const { return rank[a] < rank[b]; }
    std::string describe(const std::vector<std::string>& alphabet) const;
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

// Co-lexicographic comparison: proper suffixes come first, otherwise the last
// differing position decides by the alphabet order.
Cmp colex_compare(const Word& w1, const Word& w2, const AlphabetOrder& order);

// Symbol extended with Algorithm 1's sentinels.
// kSuf = "some word here is a proper suffix" (serialized SUF),
// kPre = "the other side's word is a proper suffix" (serialized PRE).
using ExtSym = int32_t;
inline constexpr ExtSym kSuf = -1;
inline constexpr ExtSym kPre = -2;

inline bool is_sentinel(ExtSym e) { return e < 0; }
std::string ext_symbol_token(ExtSym e, const std::vector<std::string>& alphabet);

struct ExtPair {
    ExtSym a = kSuf;
    ExtSym b = kSuf;
    bool operator==(const ExtPair&) const = default;
    bool operator<(const ExtPair& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Build an alphabet order under which the two witness pairs certify p and q
// intertwined: w1 comes from the LT[p,q] direction (impose w1.a < w1.b), w2
// from LT[q,p] (impose w2.b < w2.a). Sentinel pairs impose nothing. Remaining
// symbols follow in declaration order.
AlphabetOrder build_violating_order(const ExtPair& w1, const ExtPair& w2, int sigma);

} // namespace wheeler

#endif
