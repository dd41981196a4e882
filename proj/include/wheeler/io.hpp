#ifndef WHEELER_IO_HPP
#define WHEELER_IO_HPP

#include <iosfwd>

#include "wheeler/classify.hpp"
#include "wheeler/ov.hpp"

namespace wheeler {

inline constexpr const char* kToolVersion = "1.0.0";

// Line-oriented text format. '%' starts a comment ('#' is a real symbol in
// reduction instances). Lines: `alphabet <tok>...`, `initial <state>`,
// `finals <state>...`, `trans <state> <symbol> <state>`. States are interned
// in order of first appearance.
Dfa parse_dfa(const std::string& text);
Dfa parse_dfa_file(const std::string& path);
std::string serialize_dfa(const Dfa& d);

struct DotHighlight {
    std::vector<State> nodes;
    std::vector<EdgeRef> edges;
};
std::string export_dot(const Dfa& d, const DotHighlight& highlight = {});

// FNV-1a over the raw input bytes; stable across runs.
uint64_t input_hash(const std::string& text);

std::string uw_report_json(const UwVerdict& v, const Dfa& d, const std::string& input_text,
                           double elapsed_seconds);
std::string classification_json(const ClassificationReport& r, const Dfa& d,
                                const std::string& input_text, double elapsed_seconds);

// Full command-line surface. Returns the process exit code: 0 = property
// holds / success, 1 = property fails, 2 = input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wheeler

#endif
