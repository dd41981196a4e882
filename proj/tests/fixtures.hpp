#ifndef WHEELER_TESTS_FIXTURES_HPP
#define WHEELER_TESTS_FIXTURES_HPP

#include <string>

#include "wheeler/io.hpp"

namespace fx {
using namespace wheeler;

// running example: ac* | dc+f, the unique-Wheeler-order automaton
inline const char* kFig1Text = R"(alphabet a c d f
initial s
finals q1 q2 q5
trans s a q1
trans q1 c q2
trans q2 c q2
trans s d q4
trans q4 c q3
trans q3 c q3
trans q3 f q5
)";

// minimal trimmed automaton of a language outside UW
inline const char* kAppendixLeftText = R"(alphabet a b c
initial 1
finals 3 4
trans 1 a 2
trans 1 b 4
trans 1 c 4
trans 2 a 3
trans 2 b 4
trans 2 c 4
trans 3 c 3
trans 3 b 2
trans 3 a 4
trans 4 a 4
trans 4 b 4
trans 4 c 4
)";

// its complement, which is in UW
inline const char* kAppendixRightText = R"(alphabet a b c
initial 1
finals 1 2
trans 1 a 2
trans 2 a 3
trans 3 c 3
trans 3 b 2
)";

inline Dfa fig1() { return parse_dfa(kFig1Text); }
inline Dfa fig1_min() { return *minimize(fig1()); }
inline Dfa appendix_left() { return parse_dfa(kAppendixLeftText); }
inline Dfa appendix_left_min() { return *minimize(appendix_left()); }
inline Dfa appendix_right() { return parse_dfa(kAppendixRightText); }
inline Dfa appendix_right_min() { return *minimize(appendix_right()); }

// complete automaton with one accepting and one rejecting absorbing state
inline Dfa fig2() {
    return parse_dfa(R"(alphabet a b
initial s
finals t q
trans s a p1
trans s b p2
trans p1 b t
trans p2 a t
trans t a t
trans t b qbar
trans p1 a qbar
trans qbar a qbar
trans qbar b qbar
trans p2 b q
trans q a q
trans q b q
)");
}

inline std::vector<std::string> letters(int k) {
    std::vector<std::string> a;
    for (int i = 0; i < k; ++i) a.push_back(std::string(1, static_cast<char>('a' + i)));
    return a;
}

inline Dfa sigma_star(int k) {
    Dfa d = Dfa::make(letters(k), 1, 0);
    for (Sym a = 0; a < k; ++a) d.set_edge(0, a, 0);
    d.final_flags[0] = 1;
    return d;
}

// a Sigma* over {a,b}
inline Dfa a_sigma_star() {
    Dfa d = Dfa::make(letters(2), 2, 0);
    d.set_edge(0, 0, 1);
    d.set_edge(1, 0, 1);
    d.set_edge(1, 1, 1);
    d.final_flags[1] = 1;
    return d;
}

// a* over {a,b}
inline Dfa a_star_binary() {
    Dfa d = Dfa::make(letters(2), 1, 0);
    d.set_edge(0, 0, 0);
    d.final_flags[0] = 1;
    return d;
}

// a* over the unary alphabet {a}
inline Dfa a_star_unary() {
    Dfa d = Dfa::make(letters(1), 1, 0);
    d.set_edge(0, 0, 0);
    d.final_flags[0] = 1;
    return d;
}

// Sigma* a b over {a,b}
inline Dfa ends_with_ab() {
    Dfa d = Dfa::make(letters(2), 3, 0);
    d.set_edge(0, 0, 1);
    d.set_edge(0, 1, 0);
    d.set_edge(1, 0, 1);
    d.set_edge(1, 1, 2);
    d.set_edge(2, 0, 1);
    d.set_edge(2, 1, 0);
    d.final_flags[2] = 1;
    return d;
}

// single-word chain automaton over {a,b}
inline Dfa chain_word(const std::string& word) {
    Dfa d = Dfa::make(letters(2), static_cast<int>(word.size()) + 1, 0);
    for (size_t i = 0; i < word.size(); ++i)
        d.set_edge(static_cast<State>(i), word[i] - 'a', static_cast<State>(i + 1));
    d.final_flags[word.size()] = 1;
    return d;
}

// {ab, b}
inline Dfa finite_ab_b() {
    Dfa d = Dfa::make(letters(2), 3, 0);
    d.set_edge(0, 0, 1);
    d.set_edge(0, 1, 2);
    d.set_edge(1, 1, 2);
    d.final_flags[2] = 1;
    return d;
}

// a*ba*ba*: three states with a-self-loops on a b-chain
inline Dfa triple_a_loop_chain() {
    Dfa d = Dfa::make(letters(2), 3, 0);
    for (State q = 0; q < 3; ++q) d.set_edge(q, 0, q);
    d.set_edge(0, 1, 1);
    d.set_edge(1, 1, 2);
    d.final_flags[2] = 1;
    return d;
}

inline State st(const Dfa& d, const std::string& name) {
    for (State q = 0; q < d.n(); ++q)
        if (d.state_name(q) == name) return q;
    throw std::logic_error("fixture state '" + name + "' not found");
}

inline std::string data_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::vector<Word> short_words(int sigma, int max_len) {
    std::vector<Word> out{{}};
    size_t level_begin = 0;
    for (int len = 0; len < max_len; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (Sym a = 0; a < sigma; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

} // namespace fx

#endif
