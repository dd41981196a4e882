#include <doctest.h>

#include "fixtures.hpp"

using namespace wheeler;

namespace {
Word w(std::initializer_list<int> syms) { return Word(syms.begin(), syms.end()); }
} // namespace

TEST_CASE("colex_compare: suffixes first, then last differing letter") {
    AlphabetOrder ord = AlphabetOrder::declaration(2); // a < b
    CHECK(colex_compare(w({1}), w({0, 1}), ord) == Cmp::LT);       // b < ab (suffix)
    CHECK(colex_compare(w({0, 1}), w({1, 1}), ord) == Cmp::LT);    // ab < bb
    CHECK(colex_compare(w({}), w({1, 0}), ord) == Cmp::LT);        // empty word first
    CHECK(colex_compare(w({0, 1}), w({0, 1}), ord) == Cmp::EQ);
    CHECK(colex_compare(w({1, 0}), w({0}), ord) == Cmp::GT);
}

TEST_CASE("colex_compare respects a non-declaration order") {
    AlphabetOrder ord = AlphabetOrder::from_perm({1, 0}); // b < a
    CHECK(colex_compare(w({1}), w({0}), ord) == Cmp::LT);
    CHECK(colex_compare(w({1, 0}), w({0, 0}), ord) == Cmp::LT); // decided one before last
}

TEST_CASE("AlphabetOrder parse covers the alphabet exactly") {
    std::vector<std::string> ab = {"a", "b", "c"};
    AlphabetOrder ord = AlphabetOrder::parse("c,a,b", ab);
    CHECK(ord.perm == std::vector<Sym>{2, 0, 1});
    CHECK(ord.less(2, 0));
    CHECK(ord.describe(ab) == "c,a,b");
    CHECK_THROWS_AS(AlphabetOrder::parse("a,b", ab), InputError);
    CHECK_THROWS_AS(AlphabetOrder::parse("a,b,b", ab), InputError);
    CHECK_THROWS_AS(AlphabetOrder::parse("a,b,x", ab), InputError);
}

TEST_CASE("ext symbol tokens") {
    std::vector<std::string> ab = {"a", "b"};
    CHECK(ext_symbol_token(kSuf, ab) == "SUF");
    CHECK(ext_symbol_token(kPre, ab) == "PRE");
    CHECK(ext_symbol_token(1, ab) == "b");
}

TEST_CASE("build_violating_order satisfies both constraints") {
    // spec example: (a,b) forward, (c,d) backward -> a<b and d<c, completion a,d,b,c
    AlphabetOrder ord = build_violating_order({0, 1}, {2, 3}, 4);
    CHECK(ord.less(0, 1));
    CHECK(ord.less(3, 2));
    CHECK(ord.perm == std::vector<Sym>{0, 3, 1, 2});

    AlphabetOrder decl = build_violating_order({kSuf, kSuf}, {kPre, kPre}, 3);
    CHECK(decl.perm == std::vector<Sym>{0, 1, 2});

    // sentinel + letter pair from the q->p direction imposes y < x
    AlphabetOrder ord2 = build_violating_order({kSuf, kSuf}, {0, 1}, 3);
    CHECK(ord2.less(1, 0));
}
