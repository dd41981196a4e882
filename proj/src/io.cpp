#include "wheeler/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace wheeler {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(std::move(t));
    return toks;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Dfa parse_dfa(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::vector<std::string> alphabet;
    std::unordered_map<std::string, Sym> sym_id;
    std::vector<std::string> state_names;
    std::unordered_map<std::string, State> state_id;
    auto intern = [&](const std::string& name) {
        auto [it, fresh] = state_id.try_emplace(name, static_cast<State>(state_names.size()));
        if (fresh) state_names.push_back(name);
        return it->second;
    };

    bool have_alphabet = false, have_initial = false, have_finals = false;
    State initial = kNoState;
    std::vector<State> finals;
    struct RawEdge {
        State from;
        Sym sym;
        State to;
        int line;
    };
    std::vector<RawEdge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('%'); pos != std::string::npos) line.resize(pos);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "alphabet") {
            if (have_alphabet) parse_fail(line_no, "duplicate alphabet line");
            have_alphabet = true;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i] == "SUF" || toks[i] == "PRE")
                    parse_fail(line_no, "symbol name '" + toks[i] + "' is reserved");
                if (!sym_id.try_emplace(toks[i], static_cast<Sym>(alphabet.size())).second)
                    parse_fail(line_no, "duplicate symbol '" + toks[i] + "'");
                alphabet.push_back(toks[i]);
            }
        } else if (head == "initial") {
            if (have_initial) parse_fail(line_no, "duplicate initial line");
            if (toks.size() != 2) parse_fail(line_no, "initial wants exactly one state");
            have_initial = true;
            initial = intern(toks[1]);
        } else if (head == "finals") {
            if (have_finals) parse_fail(line_no, "duplicate finals line");
            have_finals = true;
            for (size_t i = 1; i < toks.size(); ++i) finals.push_back(intern(toks[i]));
        } else if (head == "trans") {
            if (toks.size() != 4) parse_fail(line_no, "trans wants: trans <state> <symbol> <state>");
            auto it = sym_id.find(toks[2]);
            if (it == sym_id.end()) parse_fail(line_no, "undeclared symbol '" + toks[2] + "'");
            edges.push_back({intern(toks[1]), it->second, intern(toks[3]), line_no});
        } else {
            parse_fail(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!have_alphabet) throw InputError("missing alphabet line");
    if (!have_initial) throw InputError("missing initial line");

    Dfa d = Dfa::make(alphabet, static_cast<int>(state_names.size()), initial);
    d.state_names = std::move(state_names);
    for (State q : finals) d.final_flags[q] = 1;
    for (const RawEdge& e : edges) {
        if (d.next(e.from, e.sym) != kNoState)
            parse_fail(e.line, "nondeterministic: second transition from '" + d.state_name(e.from) +
                               "' on '" + alphabet[e.sym] + "'");
        d.set_edge(e.from, e.sym, e.to);
    }
    return d;
}

Dfa parse_dfa_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dfa(buf.str());
}

std::string serialize_dfa(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& a : d.alphabet) out << " " << a;
    out << "\ninitial " << d.state_name(d.initial) << "\nfinals";
    for (State q = 0; q < d.n(); ++q)
        if (d.is_final(q)) out << " " << d.state_name(q);
    out << "\n";
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a)
            if (d.next(q, a) != kNoState)
                out << "trans " << d.state_name(q) << " " << d.alphabet[a] << " "
                    << d.state_name(d.next(q, a)) << "\n";
    return out.str();
}

std::string export_dot(const Dfa& d, const DotHighlight& highlight) {
    std::vector<char> hot_node(d.n(), 0);
    for (State q : highlight.nodes) hot_node[q] = 1;
    auto hot_edge = [&](State from, Sym sym, State to) {
        for (const EdgeRef& e : highlight.edges)
            if (e.from == from && e.sym == sym && e.to == to) return true;
        return false;
    };
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  __init [shape=point];\n";
    for (State q = 0; q < d.n(); ++q) {
        out << "  \"" << d.state_name(q) << "\" [shape=" << (d.is_final(q) ? "doublecircle" : "circle");
        if (hot_node[q]) out << ", color=red";
        out << "];\n";
    }
    out << "  __init -> \"" << d.state_name(d.initial) << "\";\n";
    for (State q = 0; q < d.n(); ++q)
        for (Sym a = 0; a < d.sigma(); ++a) {
            State t = d.next(q, a);
            if (t == kNoState) continue;
            out << "  \"" << d.state_name(q) << "\" -> \"" << d.state_name(t) << "\" [label=\""
                << d.alphabet[a] << "\"";
            if (hot_edge(q, a, t)) out << ", color=red, fontcolor=red";
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

uint64_t input_hash(const std::string& text) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

using json = nlohmann::ordered_json;

std::string hash_hex(const std::string& text) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(input_hash(text)));
    return buf;
}

json meta_json(const std::string& input_text, double elapsed_seconds) {
    return json{{"version", kToolVersion},
                {"input_hash", hash_hex(input_text)},
                {"elapsed_seconds", elapsed_seconds}};
}

json cycle_json(const Dfa& d, const std::vector<std::pair<State, State>>& cycle) {
    json arr = json::array();
    for (auto [p, q] : cycle) arr.push_back({d.state_name(p), d.state_name(q)});
    return arr;
}

json uw_certificate_json(const UwVerdict& v, const Dfa& d) {
    json cert;
    if (v.violating_order) {
        json order = json::array();
        for (Sym s : v.violating_order->perm) order.push_back(d.alphabet[s]);
        cert["order"] = std::move(order);
    }
    cert["pair"] = {d.state_name(v.p), d.state_name(v.q)};
    cert["cycle"] = cycle_json(d, v.cycle);
    json labels = json::array();
    for (Sym s : v.cycle_labels) labels.push_back(d.alphabet[s]);
    cert["cycle_labels"] = std::move(labels);
    json witnesses = json::array();
    for (const ExtPair& w : {v.witness1, v.witness2})
        witnesses.push_back(json::array(
            {ext_symbol_token(w.a, d.alphabet), ext_symbol_token(w.b, d.alphabet)}));
    cert["witnesses"] = std::move(witnesses);
    return cert;
}

} // namespace

std::string uw_report_json(const UwVerdict& v, const Dfa& d, const std::string& input_text,
                           double elapsed_seconds) {
    json rep = meta_json(input_text, elapsed_seconds);
    rep["uw"] = v.in_uw;
    if (!v.in_uw) rep["certificate"] = uw_certificate_json(v, d);
    return rep.dump(2) + "\n";
}

std::string classification_json(const ClassificationReport& r, const Dfa& d,
                                const std::string& input_text, double elapsed_seconds) {
    json rep = meta_json(input_text, elapsed_seconds);
    rep["finite"] = r.finite;
    rep["prefix_universal"] = r.prefix_universal;
    rep["slt"] = r.slt;
    rep["uw"] = r.uw;
    rep["comp_uw"] = r.comp_uw;
    rep["definite"] = r.definite;
    rep["reverse_definite"] = r.reverse_definite;
    rep["ew_possible"] = r.ew_possible;
    if (r.uw_cert) rep["uw_certificate"] = uw_certificate_json(*r.uw_cert, d);
    if (r.comp_uw_cert) {
        // the certificate names states of the complement automaton, which the
        // reader cannot resolve; keep only the order
        json cert;
        if (r.comp_uw_cert->violating_order) {
            json order = json::array();
            for (Sym s : r.comp_uw_cert->violating_order->perm) order.push_back(d.alphabet[s]);
            cert["order"] = std::move(order);
        }
        rep["comp_uw_certificate"] = std::move(cert);
    }
    if (r.slt_cert) {
        json cert;
        cert["cycle"] = cycle_json(d, r.slt_cert->nodes);
        json labels = json::array();
        for (Sym s : r.slt_cert->labels) labels.push_back(d.alphabet[s]);
        cert["cycle_labels"] = std::move(labels);
        rep["slt_certificate"] = std::move(cert);
    }
    if (r.ew_cert) {
        json cert;
        cert["triple"] = {d.state_name(r.ew_cert->p), d.state_name(r.ew_cert->q),
                          d.state_name(r.ew_cert->r)};
        json gamma = json::array();
        for (Sym s : r.ew_cert->gamma) gamma.push_back(d.alphabet[s]);
        cert["gamma"] = std::move(gamma);
        rep["ew_certificate"] = std::move(cert);
    }
    if (r.rdef_cert) {
        auto words = [&](const std::vector<Word>& ws) {
            json arr = json::array();
            for (const Word& w : ws) {
                std::string s;
                for (Sym x : w) {
                    if (!s.empty()) s += " ";
                    s += d.alphabet[x];
                }
                arr.push_back(std::move(s));
            }
            return arr;
        };
        rep["rdef_decomposition"] = {{"f", words(r.rdef_cert->f)}, {"g", words(r.rdef_cert->g)}};
    }
    return rep.dump(2) + "\n";
}

} // namespace wheeler
