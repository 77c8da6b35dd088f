// Python bindings for the core operations: parsing, expansion, encodings,
// equality, support hulls and encoding arithmetic. Encodings cross the
// boundary as their canonical JSON form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "puiseux/arithmetic.hpp"
#include "puiseux/encoding.hpp"
#include "puiseux/equality.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/poly_algebra.hpp"
#include "puiseux/polytope.hpp"
#include "puiseux/support.hpp"
#include "puiseux/svg.hpp"

namespace py = pybind11;
using namespace puiseux;

namespace {

Edge edge_from_lists(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    auto mk = [](const std::vector<std::string>& v) {
        std::vector<Rational> entries;
        for (const auto& s : v) entries.push_back(Rational::parse(s));
        return ExpVec(std::move(entries));
    };
    ExpVec va = mk(a), vb = mk(b);
    return va < vb ? Edge{va, vb} : Edge{vb, va};
}

py::dict branch_dict(const ExpansionBranch& b, const std::vector<std::string>& vars) {
    py::dict d;
    d["truncation"] = b.truncation.str(vars);
    py::list terms;
    for (const auto& [e, c] : b.truncation.terms()) {
        py::list exps;
        for (std::size_t i = 0; i < e.size(); ++i) exps.append(e[i].str());
        terms.append(py::make_tuple(c.str(), exps));
    }
    d["terms"] = terms;
    d["anchor"] = b.bound.anchor.str();
    d["cone"] = b.bound.cone.str();
    d["finished"] = b.finished;
    d["multiplicity"] = b.multiplicity;
    return d;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal:
            return "equal";
        case Verdict::NotEqual:
            return "not-equal";
        default:
            return "unknown";
    }
}

}  // namespace

PYBIND11_MODULE(_puiseux, m) {
    m.doc() = "exact Newton-Puiseux expansion and arithmetic for algebraic series";

    py::register_exception<Error>(m, "PuiseuxError");

    m.def(
        "expand",
        [](const std::string& poly, const std::vector<std::string>& vars,
           const std::string& unknown, const std::vector<std::string>& v1,
           const std::vector<std::string>& v2, const std::string& order, int k) {
            YPoly p = parse_expression(poly, vars, unknown);
            ExpansionResult res = expand(p, edge_from_lists(v1, v2), parse_order(order), k);
            py::list out;
            for (const auto& b : res.branches) out.append(branch_dict(b, vars));
            return out;
        },
        py::arg("poly"), py::arg("vars"), py::arg("unknown"), py::arg("edge_minor"),
        py::arg("edge_major"), py::arg("order"), py::arg("k") = 0,
        "expand the series solutions attached to an admissible edge");

    m.def(
        "admissible_edges",
        [](const std::string& poly, const std::vector<std::string>& vars,
           const std::string& unknown) {
            YPoly p = parse_expression(poly, vars, unknown);
            NewtonPolytope np = newton_polytope(p);
            py::list out;
            for (const auto& e : np.admissible_edges()) {
                py::dict d;
                d["edge"] = e.str();
                d["slope"] = slope(e).str();
                d["barrier_cone"] = barrier_cone(np.points(), e).str();
                out.append(d);
            }
            return out;
        },
        py::arg("poly"), py::arg("vars"), py::arg("unknown"));

    m.def(
        "encode",
        [](const std::string& poly, const std::vector<std::string>& vars,
           const std::string& unknown, const std::vector<std::string>& v1,
           const std::vector<std::string>& v2, const std::string& order, int k) {
            YPoly p = parse_expression(poly, vars, unknown);
            auto encs = encode(p, edge_from_lists(v1, v2), parse_order(order), k, vars, unknown);
            py::list out;
            for (const auto& enc : encs) out.append(to_json(enc));
            return out;
        },
        py::arg("poly"), py::arg("vars"), py::arg("unknown"), py::arg("edge_minor"),
        py::arg("edge_major"), py::arg("order"), py::arg("k") = 0,
        "series encodings (JSON strings), one per branch");

    m.def(
        "refine",
        [](const std::string& enc_json, int k) {
            return to_json(refine(encoding_from_json(enc_json), k));
        },
        py::arg("encoding"), py::arg("k"));

    m.def(
        "validate",
        [](const std::string& enc_json) { return validate(encoding_from_json(enc_json)); },
        py::arg("encoding"));

    m.def(
        "equal",
        [](const std::string& a, const std::string& b, int budget) {
            EqualityVerdict v = equal(encoding_from_json(a), encoding_from_json(b), budget);
            py::dict d;
            d["verdict"] = verdict_name(v.value);
            d["explanation"] = v.explanation;
            if (v.witness_exponent) d["witness_exponent"] = v.witness_exponent->str();
            if (v.certificate) {
                py::dict c;
                c["order"] = v.certificate->common_order.str();
                c["sum_line_free"] = v.certificate->sum_line_free;
                d["certificate"] = c;
            }
            return d;
        },
        py::arg("first"), py::arg("second"), py::arg("budget") = 8);

    m.def(
        "support_hull",
        [](const std::string& enc_json, int budget) {
            SupportHull hull = hull_vertices(encoding_from_json(enc_json), budget);
            py::list vs;
            bool all_verified = true;
            for (const auto& sv : hull.vertices) {
                py::dict d;
                d["vertex"] = sv.vertex.str();
                d["cone"] = sv.cone.str();
                d["verified"] = sv.verified;
                vs.append(d);
                all_verified = all_verified && sv.verified;
            }
            py::dict out;
            out["vertices"] = vs;
            if (all_verified) {
                py::list fs;
                for (const auto& face : bounded_faces(hull)) {
                    py::list f;
                    for (const auto& v : face) f.append(v.str());
                    fs.append(f);
                }
                out["bounded_faces"] = fs;
            }
            return out;
        },
        py::arg("encoding"), py::arg("budget") = 8);

    m.def(
        "combine",
        [](const std::string& a, const std::string& b, const std::string& op,
           const std::string& order, int budget) {
            CombineOp o = op == "add"   ? CombineOp::add
                          : op == "mul" ? CombineOp::mul
                                        : CombineOp::reciprocal;
            SeriesEncoding ea = encoding_from_json(a);
            SeriesEncoding eb = o == CombineOp::reciprocal ? ea : encoding_from_json(b);
            ArithmeticResult r = combine(ea, eb, o, parse_order(order), budget);
            py::dict d;
            if (r.status == ArithmeticResult::Status::Combined) {
                d["status"] = "combined";
                d["encoding"] = to_json(*r.encoding);
            } else {
                d["status"] = r.status == ArithmeticResult::Status::NotAlgebraicEvidence
                                  ? "not-algebraic-evidence"
                                  : "unknown";
                py::list rejections;
                for (const auto& rej : r.rejections) {
                    py::dict rd;
                    rd["candidate"] = rej.truncation.str();
                    rd["style"] = rej.support_miss ? "support-miss" : "prefix-mismatch";
                    if (rej.at.size()) rd["at"] = rej.at.str();
                    rejections.append(rd);
                }
                d["rejections"] = rejections;
                d["diagnostic"] = r.diagnostic;
            }
            return d;
        },
        py::arg("first"), py::arg("second"), py::arg("op"), py::arg("order"),
        py::arg("budget") = 8);

    m.def(
        "render_svg",
        [](const std::string& enc_json) {
            return render_svg(encoding_from_json(enc_json).bound);
        },
        py::arg("encoding"), "svg rendering of an encoding's cone bound");
}
