#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wheeler/io.hpp"
#include "wheeler/oracle.hpp"

namespace py = pybind11;
using namespace wheeler;

namespace {

std::string minimize_text(const std::string& text) {
    Dfa d = parse_dfa(text);
    MaybeDfa m = minimize(d);
    return serialize_dfa(m ? *m : empty_language_dfa(d.alphabet));
}

std::string complement_text(const std::string& text) {
    Dfa d = parse_dfa(text);
    MaybeDfa cm = complement(d);
    return serialize_dfa(cm ? *cm : empty_language_dfa(d.alphabet));
}

py::dict uw_text(const std::string& text) {
    Dfa d = parse_dfa(text);
    MaybeDfa m = minimize(d);
    py::dict out;
    if (!m) {
        out["uw"] = true;
        return out;
    }
    UwVerdict v = decide_uw(*m);
    out["uw"] = v.in_uw;
    if (!v.in_uw && v.violating_order) {
        py::list order;
        for (Sym s : v.violating_order->perm) order.append(m->alphabet[s]);
        out["violating_order"] = order;
        out["pair"] = py::make_tuple(m->state_name(v.p), m->state_name(v.q));
    }
    return out;
}

bool wheeler_text(const std::string& text, const std::string& order_text) {
    Dfa d = parse_dfa(text);
    MaybeDfa m = minimize(d);
    if (!m) return true;
    return is_wheeler_language(*m, AlphabetOrder::parse(order_text, m->alphabet)).in_wh;
}

py::dict classify_text(const std::string& text) {
    ClassificationReport r = classify(parse_dfa(text));
    py::dict out;
    out["finite"] = r.finite;
    out["prefix_universal"] = r.prefix_universal;
    out["slt"] = r.slt;
    out["uw"] = r.uw;
    out["comp_uw"] = r.comp_uw;
    out["definite"] = r.definite;
    out["reverse_definite"] = r.reverse_definite;
    out["ew_possible"] = r.ew_possible;
    return out;
}

std::string gen_ov_text(int n, int d, uint64_t seed, const std::string& mode) {
    OvMode m = mode == "planted-yes"  ? OvMode::PlantedYes
               : mode == "planted-no" ? OvMode::PlantedNo
                                      : OvMode::Random;
    return serialize_ov(gen_ov(n, d, seed, m));
}

std::string ov_to_dfa_text(const std::string& ov_text) {
    return serialize_dfa(ov_to_dfa(parse_ov(ov_text)).dfa);
}

bool solve_ov_text(const std::string& ov_text) { return solve_ov_brute(parse_ov(ov_text)); }

} // namespace

PYBIND11_MODULE(_wheelerlib, mod) {
    mod.doc() = "Wheeler language class deciders (text-format front end)";
    mod.def("minimize", &minimize_text, "Minimal trimmed DFA, text in/out");
    mod.def("complement", &complement_text, "Minimal complement DFA, text in/out");
    mod.def("is_uw", &uw_text, "Universally-Wheeler verdict as a dict");
    mod.def("is_wheeler", &wheeler_text, py::arg("dfa_text"), py::arg("order"),
            "Wheeler under a fixed comma-separated alphabet order");
    mod.def("classify", &classify_text, "Class membership flags as a dict");
    mod.def("export_dot", [](const std::string& t) { return export_dot(parse_dfa(t)); });
    mod.def("gen_ov", &gen_ov_text, py::arg("n"), py::arg("d"), py::arg("seed") = 1,
            py::arg("mode") = "random");
    mod.def("ov_to_dfa", &ov_to_dfa_text);
    mod.def("solve_ov", &solve_ov_text);
    mod.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
