#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "wheeler/io.hpp"
#include "wheeler/oracle.hpp"

namespace wheeler {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

std::string word_str(const Word& w, const std::vector<std::string>& alphabet) {
    if (w.empty()) return "(empty word)";
    std::string s;
    for (Sym x : w) {
        if (!s.empty()) s += " ";
        s += alphabet[x];
    }
    return s;
}

// language-level checks run on the minimal automaton; say so when it differs
MaybeDfa minimize_noted(const Dfa& d, std::ostream& err) {
    MaybeDfa m = minimize(d);
    int after = m ? m->n() : 0;
    if (after != d.n()) err << "minimized input: " << d.n() << " -> " << after << " states\n";
    return m;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

void print_cycle(const Dfa& d, const std::vector<std::pair<State, State>>& cycle,
                 const std::vector<Sym>& labels, std::ostream& out) {
    out << "cycle:";
    for (size_t i = 0; i < cycle.size(); ++i)
        out << " (" << d.state_name(cycle[i].first) << "," << d.state_name(cycle[i].second) << ") -"
            << d.alphabet[labels[i]] << "->";
    if (!cycle.empty())
        out << " (" << d.state_name(cycle[0].first) << "," << d.state_name(cycle[0].second) << ")";
    out << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wheeler language class toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    struct {
        std::string file, order, state_order, output, mode = "random", sizes;
        bool witness = false, json = false, verify = false;
        int n_vecs = 0, dim = 0, reps = 3, workers = 1;
        uint64_t seed = 1;
    } opt;

    auto* validate = app.add_subcommand("validate", "Parse and sanity-check a DFA file");
    validate->add_option("file", opt.file)->required();
    validate->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        out << "ok: " << d.n() << " states, " << d.edge_count() << " edges, " << d.sigma()
            << " symbols\n";
    });

    auto* cmd_min = app.add_subcommand("minimize", "Minimal trimmed DFA of the language");
    cmd_min->add_option("file", opt.file)->required();
    cmd_min->add_option("-o", opt.output);
    cmd_min->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        MaybeDfa m = minimize_noted(d, err);
        write_output(opt.output, serialize_dfa(m ? *m : empty_language_dfa(d.alphabet)), out);
    });

    auto* cmd_comp = app.add_subcommand("complement", "Minimal trimmed DFA of the complement");
    cmd_comp->add_option("file", opt.file)->required();
    cmd_comp->add_option("-o", opt.output);
    cmd_comp->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        MaybeDfa cm = complement(d);
        write_output(opt.output, serialize_dfa(cm ? *cm : empty_language_dfa(d.alphabet)), out);
    });

    auto* cmd_wh = app.add_subcommand("wheeler", "Is the language Wheeler under a fixed order?");
    cmd_wh->add_option("file", opt.file)->required();
    cmd_wh->add_option("--order", opt.order)->required();
    cmd_wh->add_flag("--witness", opt.witness);
    cmd_wh->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        AlphabetOrder order = AlphabetOrder::parse(opt.order, d.alphabet);
        MaybeDfa m = minimize_noted(d, err);
        if (!m) {
            out << "InWh (empty language)\n";
            return;
        }
        WheelerResult res = is_wheeler_language(*m, order);
        if (res.in_wh) {
            out << "InWh\n";
            return;
        }
        out << "NotWh\n";
        exit_code = 1;
        if (opt.witness && res.violation) {
            const WheelerViolation& v = *res.violation;
            out << "intertwined pair: " << m->state_name(v.p) << ", " << m->state_name(v.q) << "\n";
            print_cycle(*m, v.cycle, v.cycle_labels, out);
            out << "alpha  (into " << m->state_name(v.p) << "): " << word_str(v.alpha, m->alphabet)
                << "\nbeta   (into " << m->state_name(v.q) << "): " << word_str(v.beta, m->alphabet)
                << "\nbeta'  (into " << m->state_name(v.q) << "): " << word_str(v.beta2, m->alphabet)
                << "\nalpha' (into " << m->state_name(v.p) << "): " << word_str(v.alpha2, m->alphabet)
                << "\n";
        }
    });

    auto* cmd_wo = app.add_subcommand("wheeler-order", "Co-lex order on the automaton's states");
    cmd_wo->add_option("file", opt.file)->required();
    cmd_wo->add_option("--order", opt.order)->required();
    cmd_wo->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        AlphabetOrder order = AlphabetOrder::parse(opt.order, d.alphabet);
        ColexOrderResult res = automaton_colex_order(d, order);
        if (auto* total = std::get_if<TotalStateOrder>(&res)) {
            out << "total:";
            for (size_t i = 0; i < total->states.size(); ++i)
                out << (i ? " < " : " ") << d.state_name(total->states[i]);
            out << "\n";
        } else {
            auto& pair = std::get<IncomparablePair>(res);
            out << "incomparable: " << d.state_name(pair.p) << ", " << d.state_name(pair.q) << "\n";
            exit_code = 1;
        }
    });

    auto* cmd_ax = app.add_subcommand("axioms", "Check Wheeler axioms for a given state order");
    cmd_ax->add_option("file", opt.file)->required();
    cmd_ax->add_option("--order", opt.order)->required();
    cmd_ax->add_option("--state-order", opt.state_order)->required();
    cmd_ax->callback([&] {
        Dfa d = parse_dfa(read_file(opt.file));
        AlphabetOrder order = AlphabetOrder::parse(opt.order, d.alphabet);
        std::vector<State> states;
        for (const std::string& name : split_csv(opt.state_order)) {
            State q = kNoState;
            for (State c = 0; c < d.n(); ++c)
                if (d.state_name(c) == name) q = c;
            if (q == kNoState) throw InputError("unknown state '" + name + "' in --state-order");
            states.push_back(q);
        }
        AxiomCheck check = validate_wheeler_axioms(d, states, order);
        if (check.ok()) {
            out << "Wheeler\n";
        } else {
            out << check.describe(d) << "\n";
            exit_code = 1;
        }
    });

    auto* cmd_uw = app.add_subcommand("uw", "Is the language universally Wheeler?");
    cmd_uw->add_option("file", opt.file)->required();
    cmd_uw->add_flag("--witness", opt.witness);
    cmd_uw->add_flag("--json", opt.json);
    cmd_uw->callback([&] {
        std::string text = read_file(opt.file);
        Dfa d = parse_dfa(text);
        MaybeDfa m = minimize_noted(d, err);
        auto t0 = std::chrono::steady_clock::now();
        UwVerdict v;
        if (m) v = decide_uw(*m);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const Dfa& named = m ? *m : d;
        if (opt.json) {
            out << uw_report_json(v, named, text, secs);
        } else if (v.in_uw) {
            out << "InUW\n";
        } else {
            out << "NotUW\n";
            out << "violating order: " << v.violating_order->describe(named.alphabet) << "\n";
            if (opt.witness) {
                out << "intertwined pair: " << named.state_name(v.p) << ", " << named.state_name(v.q)
                    << "\n";
                print_cycle(named, v.cycle, v.cycle_labels, out);
                out << "witness labels: (" << ext_symbol_token(v.witness1.a, named.alphabet) << ","
                    << ext_symbol_token(v.witness1.b, named.alphabet) << ") and ("
                    << ext_symbol_token(v.witness2.a, named.alphabet) << ","
                    << ext_symbol_token(v.witness2.b, named.alphabet) << ")\n";
            }
        }
        if (!v.in_uw) exit_code = 1;
    });

    auto* cmd_cls = app.add_subcommand("classify", "Full class membership report");
    cmd_cls->add_option("file", opt.file)->required();
    cmd_cls->add_flag("--json", opt.json);
    cmd_cls->callback([&] {
        std::string text = read_file(opt.file);
        Dfa d = parse_dfa(text);
        MaybeDfa m = minimize_noted(d, err);
        auto t0 = std::chrono::steady_clock::now();
        ClassificationReport r = classify(d);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const Dfa& named = m ? *m : d;
        if (opt.json) {
            out << classification_json(r, named, text, secs);
            return;
        }
        auto line = [&](const char* k, bool v) { out << k << ": " << (v ? "yes" : "no") << "\n"; };
        line("finite", r.finite);
        line("prefix_universal", r.prefix_universal);
        line("slt", r.slt);
        line("uw", r.uw);
        line("comp_uw", r.comp_uw);
        line("definite", r.definite);
        line("reverse_definite", r.reverse_definite);
        line("ew_possible", r.ew_possible);
    });

    auto* cmd_ouw = app.add_subcommand("oracle-uw", "Brute-force UW check (all orders)");
    cmd_ouw->add_option("file", opt.file)->required();
    cmd_ouw->callback([&] {
        MaybeDfa m = minimize(parse_dfa(read_file(opt.file)));
        bool uw = !m || brute_uw(*m);
        out << (uw ? "InUW" : "NotUW") << "\n";
        if (!uw) exit_code = 1;
    });

    auto* cmd_oew = app.add_subcommand("oracle-ew", "Brute-force EW check (all orders)");
    cmd_oew->add_option("file", opt.file)->required();
    cmd_oew->callback([&] {
        MaybeDfa m = minimize(parse_dfa(read_file(opt.file)));
        bool ew = !m || exact_ew_small(*m);
        out << (ew ? "EW" : "NotEW") << "\n";
        if (!ew) exit_code = 1;
    });

    auto* cmd_gen = app.add_subcommand("gen-ov", "Generate an orthogonal-vectors instance");
    cmd_gen->add_option("N", opt.n_vecs)->required();
    cmd_gen->add_option("d", opt.dim)->required();
    cmd_gen->add_option("--seed", opt.seed);
    cmd_gen->add_option("--mode", opt.mode)->check(CLI::IsMember({"planted-yes", "planted-no", "random"}));
    cmd_gen->add_option("-o", opt.output);
    cmd_gen->callback([&] {
        OvMode mode = opt.mode == "planted-yes"  ? OvMode::PlantedYes
                      : opt.mode == "planted-no" ? OvMode::PlantedNo
                                                 : OvMode::Random;
        write_output(opt.output, serialize_ov(gen_ov(opt.n_vecs, opt.dim, opt.seed, mode)), out);
    });

    auto* cmd_o2d = app.add_subcommand("ov2dfa", "Reduce an OV instance to a DFA");
    cmd_o2d->add_option("file", opt.file)->required();
    cmd_o2d->add_option("-o", opt.output);
    cmd_o2d->add_flag("--verify", opt.verify);
    cmd_o2d->callback([&] {
        OvInstance inst = parse_ov(read_file(opt.file));
        ReductionOutput red = ov_to_dfa(inst);
        err << "reduction: " << red.dfa.n() << " states, " << red.dfa.edge_count() << " edges\n";
        write_output(opt.output, serialize_dfa(red.dfa), out);
        if (opt.verify) {
            ReductionReport rep = verify_reduction(red, inst);
            err << "C1 minimal:        " << (rep.c1 ? "pass" : "FAIL") << "\n"
                << "C2 cycle contract: " << (rep.c2 ? "pass" : "FAIL") << "\n"
                << "C3 entry words:    " << (rep.c3 ? "pass" : "FAIL") << "\n"
                << "C4 uw <=> not-OV:  " << (rep.c4 ? "pass" : "FAIL") << "\n";
            if (!rep.notes.empty()) err << rep.notes << "\n";
            if (!rep.all()) exit_code = 1;
        }
    });

    auto* cmd_bench = app.add_subcommand("bench", "Time decide_uw on reduction instances");
    cmd_bench->add_option("--sizes", opt.sizes, "comma-separated NxD entries, e.g. 64x16,128x16")
        ->required();
    cmd_bench->add_option("--reps", opt.reps);
    cmd_bench->add_option("--seed", opt.seed);
    cmd_bench->add_option("--workers", opt.workers);
    cmd_bench->add_option("-o", opt.output);
    cmd_bench->callback([&] {
        std::vector<std::pair<int, int>> sizes;
        for (const std::string& tok : split_csv(opt.sizes)) {
            auto x = tok.find('x');
            if (x == std::string::npos) throw InputError("bad --sizes entry '" + tok + "'");
            sizes.emplace_back(std::stoi(tok.substr(0, x)), std::stoi(tok.substr(x + 1)));
        }
        Budgets budgets = default_budgets();
        budgets.pair_nodes = std::numeric_limits<int64_t>::max();
        BenchResult res = bench(sizes, opt.reps, opt.seed, opt.workers, budgets);
        write_output(opt.output, bench_csv(res), out);
        err << "log-log slope over " << res.growth.points << " points: " << res.growth.slope << "\n";
    });

    auto* cmd_dot = app.add_subcommand("export-dot", "Emit the automaton as a DOT digraph");
    cmd_dot->add_option("file", opt.file)->required();
    cmd_dot->add_option("-o", opt.output);
    cmd_dot->callback([&] {
        write_output(opt.output, export_dot(parse_dfa(read_file(opt.file))), out);
    });

    std::vector<const char*> argv{"wheeler"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace wheeler
