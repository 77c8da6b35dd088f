// puiseux: exact Newton-Puiseux expansion of algebraic series, finite
// encodings, equality tests, support hulls and encoding arithmetic.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "puiseux/arithmetic.hpp"
#include "puiseux/encoding.hpp"
#include "puiseux/equality.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/poly_algebra.hpp"
#include "puiseux/polytope.hpp"
#include "puiseux/support.hpp"
#include "puiseux/svg.hpp"

using namespace puiseux;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // NotEqual / NotAlgebraicEvidence
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitMath = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write " + out_path);
    out << text;
}

json exp_json(const ExpVec& e) {
    json a = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) a.push_back(e[i].str());
    return a;
}

json bound_json(const ConeBound& b) {
    json j;
    json exc = json::array();
    for (const auto& e : b.exceptional) exc.push_back(exp_json(e));
    j["exceptional"] = exc;
    j["anchor"] = exp_json(b.anchor);
    json gens = json::array();
    for (const auto& g : b.cone.generators()) gens.push_back(exp_json(g));
    j["generators"] = gens;
    return j;
}

ExpVec parse_vertex(const std::string& src, std::size_t dim) {
    std::vector<Rational> entries;
    std::string body = src;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        entries.push_back(Rational::parse(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (entries.size() != dim)
        throw SyntaxError("edge vertex needs " + std::to_string(dim) + " coordinates", 0);
    return ExpVec(std::move(entries));
}

Edge parse_edge(const std::string& spec, std::size_t dim) {
    std::size_t dash = spec.find(")-(");
    if (dash == std::string::npos) throw SyntaxError("edge syntax is (v1)-(v2)", 0);
    ExpVec a = parse_vertex(spec.substr(0, dash + 1), dim);
    ExpVec b = parse_vertex(spec.substr(dash + 2), dim);
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct PolyInput {
    std::string expr;
    std::vector<std::string> vars{"x", "y"};
    std::string unknown = "z";

    YPoly parse() const { return parse_expression(expr, vars, unknown); }
};

void add_poly_options(CLI::App* cmd, PolyInput& in) {
    cmd->add_option("-p,--poly", in.expr, "annihilating polynomial expression")->required();
    cmd->add_option("--vars", in.vars, "series variables (default: x y)");
    cmd->add_option("--unknown", in.unknown, "unknown to solve for (default: z)");
}

json branch_json(const ExpansionBranch& b, const std::vector<std::string>& vars) {
    json j;
    j["truncation"] = b.truncation.str(vars);
    json terms = json::array();
    for (const auto& [e, c] : b.truncation.terms())
        terms.push_back({{"coeff", c.str()}, {"exp", exp_json(e)}});
    j["terms"] = terms;
    j["bound"] = bound_json(b.bound);
    j["finished"] = b.finished;
    j["multiplicity"] = b.multiplicity;
    return j;
}

json verdict_json(const EqualityVerdict& v) {
    json j;
    j["verdict"] = v.value == Verdict::Equal      ? "equal"
                   : v.value == Verdict::NotEqual ? "not-equal"
                                                  : "unknown";
    j["explanation"] = v.explanation;
    if (v.witness_exponent) {
        j["witness"] = {{"exponent", exp_json(*v.witness_exponent)},
                        {"coeff1", v.witness_coeff1.str()},
                        {"coeff2", v.witness_coeff2.str()}};
    }
    if (v.certificate) {
        const auto& c = *v.certificate;
        json cert;
        cert["order"] = c.common_order.str();
        cert["order_source"] = c.source == EqualityCertificate::OrderSource::first_order ? "first"
                               : c.source == EqualityCertificate::OrderSource::second_order
                                   ? "second"
                                   : "interior-of-sum";
        cert["cone1"] = c.cone1.str();
        cert["cone2"] = c.cone2.str();
        cert["sum_line_free"] = c.sum_line_free;
        if (c.sum_line_free) cert["sum_cone"] = c.sum_cone.str();
        j["certificate"] = cert;
    }
    return j;
}

int run_equal(const std::string& f1, const std::string& f2, int budget,
              const std::string& out_path) {
    SeriesEncoding a = encoding_from_json(slurp(f1));
    SeriesEncoding b = encoding_from_json(slurp(f2));
    EqualityVerdict v = equal(a, b, budget);
    emit(verdict_json(v).dump(2), out_path);
    if (v.value == Verdict::Equal) return kExitOk;
    if (v.value == Verdict::NotEqual) return kExitNegative;
    return kExitUnknown;
}

json rejection_json(const CandidateRejection& r) {
    json j;
    j["candidate"] = r.truncation.is_zero() ? "0" : r.truncation.str();
    j["order"] = r.order.rows().empty() ? "" : r.order.str();
    if (r.at.size()) j["at"] = exp_json(r.at);
    j["combined_coeff"] = r.combined_coeff.str();
    j["candidate_coeff"] = r.candidate_coeff.str();
    j["style"] = r.support_miss ? "support-miss" : "prefix-mismatch";
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

int run_combine(CombineOp op, const std::string& f1, const std::string& f2,
                const std::string& order_text, int budget, const std::string& out_path) {
    SeriesEncoding a = encoding_from_json(slurp(f1));
    SeriesEncoding b = op == CombineOp::reciprocal ? a : encoding_from_json(slurp(f2));
    OrderSpec w = parse_order(order_text);
    ArithmeticResult r = combine(a, b, op, w, budget);
    if (r.status == ArithmeticResult::Status::Combined) {
        emit(to_json(*r.encoding), out_path);
        return kExitOk;
    }
    json j;
    j["status"] = r.status == ArithmeticResult::Status::NotAlgebraicEvidence
                      ? "not-algebraic-evidence"
                      : "unknown";
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    json rejections = json::array();
    for (const auto& rej : r.rejections) rejections.push_back(rejection_json(rej));
    j["rejections"] = rejections;
    emit(j.dump(2), out_path);
    return r.status == ArithmeticResult::Status::NotAlgebraicEvidence ? kExitNegative
                                                                      : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for multivariate algebraic series"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- expand
    PolyInput expand_in;
    std::string expand_edge, expand_order, expand_out;
    int expand_k = 0, expand_budget = 64;
    bool expand_list = false;
    auto* cmd_expand = app.add_subcommand("expand", "expand series solutions from an edge");
    add_poly_options(cmd_expand, expand_in);
    cmd_expand->add_option("-e,--edge", expand_edge, "edge as (v1)-(v2) in Q^(n+1)");
    cmd_expand->add_option("-w,--order", expand_order, "order spec, e.g. (-sqrt(2),-1)");
    cmd_expand->add_option("-k", expand_k, "minimum number of terms");
    cmd_expand->add_option("--budget", expand_budget, "refinement round cap");
    cmd_expand->add_flag("--list-edges", expand_list, "list admissible edges and exit");
    cmd_expand->add_option("-o,--output", expand_out, "output path (default stdout)");

    // ------------------------------------------------------------- encode
    PolyInput encode_in;
    std::string encode_edge, encode_order, encode_out;
    int encode_k = 0;
    auto* cmd_encode = app.add_subcommand("encode", "produce series encodings from an edge");
    add_poly_options(cmd_encode, encode_in);
    cmd_encode->add_option("-e,--edge", encode_edge, "edge as (v1)-(v2)")->required();
    cmd_encode->add_option("-w,--order", encode_order, "order spec")->required();
    cmd_encode->add_option("-k", encode_k, "minimum number of terms");
    cmd_encode->add_option("-o,--output", encode_out, "output path");

    // ------------------------------------------------------------- refine
    std::string refine_file, refine_out;
    int refine_k = 0;
    auto* cmd_refine = app.add_subcommand("refine", "extend an encoding's truncation");
    cmd_refine->add_option("encoding", refine_file, "encoding json file")->required();
    cmd_refine->add_option("-k", refine_k, "target number of terms")->required();
    cmd_refine->add_option("-o,--output", refine_out, "output path");

    // ------------------------------------------------------------- equal
    std::string eq_a, eq_b, eq_out;
    int eq_budget = 8;
    auto* cmd_equal = app.add_subcommand("equal", "decide equality of two encodings");
    cmd_equal->add_option("first", eq_a, "first encoding json")->required();
    cmd_equal->add_option("second", eq_b, "second encoding json")->required();
    cmd_equal->add_option("--budget", eq_budget, "refinement rounds");
    cmd_equal->add_option("-o,--output", eq_out, "output path");

    // -------------------------------------------------------- support-hull
    std::string hull_file, hull_out, hull_svg;
    int hull_budget = 8;
    auto* cmd_hull = app.add_subcommand("support-hull",
                                        "vertices, cones and bounded faces of conv(supp(phi))");
    cmd_hull->add_option("encoding", hull_file, "encoding json")->required();
    cmd_hull->add_option("--budget", hull_budget, "equality budget per edge");
    cmd_hull->add_option("-o,--output", hull_out, "output path");
    cmd_hull->add_option("--svg", hull_svg, "also write an svg rendering here");

    // ------------------------------------------------------- add/mul/inv
    std::string ar_a, ar_b, ar_order, ar_out;
    int ar_budget = 8;
    auto* cmd_add = app.add_subcommand("add", "encode the sum of two encoded series");
    auto* cmd_mul = app.add_subcommand("mul", "encode the product of two encoded series");
    auto* cmd_inv = app.add_subcommand("inv", "encode the reciprocal of an encoded series");
    for (auto* cmd : {cmd_add, cmd_mul}) {
        cmd->add_option("first", ar_a, "first encoding json")->required();
        cmd->add_option("second", ar_b, "second encoding json")->required();
        cmd->add_option("-w,--order", ar_order, "common order spec")->required();
        cmd->add_option("--budget", ar_budget, "refinement rounds");
        cmd->add_option("-o,--output", ar_out, "output path");
    }
    cmd_inv->add_option("first", ar_a, "encoding json")->required();
    cmd_inv->add_option("-w,--order", ar_order, "order spec")->required();
    cmd_inv->add_option("--budget", ar_budget, "refinement rounds");
    cmd_inv->add_option("-o,--output", ar_out, "output path");

    // ------------------------------------------------------------- render
    std::string render_file, render_out;
    auto* cmd_render = app.add_subcommand("render", "render a support hull or bound as svg");
    cmd_render->add_option("input", render_file, "support-hull json or encoding json")->required();
    cmd_render->add_option("-o,--output", render_out, "output svg path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_expand->parsed()) {
            YPoly p = expand_in.parse();
            NewtonPolytope np = newton_polytope(p);
            if (expand_list) {
                json j = json::array();
                int idx = 0;
                for (const auto& e : np.admissible_edges()) {
                    json row;
                    row["index"] = idx++;
                    row["edge"] = e.str();
                    row["slope"] = slope(e).str();
                    row["barrier_cone"] = barrier_cone(np.points(), e).str();
                    j.push_back(row);
                }
                emit(j.dump(2), expand_out);
                return kExitOk;
            }
            if (expand_edge.empty() || expand_order.empty()) {
                std::cerr << "expand needs --edge and --order (or --list-edges)\n";
                return kExitUsage;
            }
            Edge e = parse_edge(expand_edge, expand_in.vars.size() + 1);
            OrderSpec w = parse_order(expand_order);
            ExpansionResult res = expand(p, e, w, expand_k, expand_budget);
            json j = json::array();
            for (const auto& b : res.branches) j.push_back(branch_json(b, expand_in.vars));
            emit(j.dump(2), expand_out);
            return kExitOk;
        }
        if (cmd_encode->parsed()) {
            YPoly p = encode_in.parse();
            Edge e = parse_edge(encode_edge, encode_in.vars.size() + 1);
            OrderSpec w = parse_order(encode_order);
            auto encs = encode(p, e, w, encode_k, encode_in.vars, encode_in.unknown);
            if (encs.size() == 1) {
                emit(to_json(encs[0]), encode_out);
            } else {
                json j = json::array();
                for (const auto& enc : encs) j.push_back(json::parse(to_json(enc)));
                emit(j.dump(2), encode_out);
            }
            return kExitOk;
        }
        if (cmd_refine->parsed()) {
            SeriesEncoding enc = encoding_from_json(slurp(refine_file));
            emit(to_json(refine(enc, refine_k)), refine_out);
            return kExitOk;
        }
        if (cmd_equal->parsed()) return run_equal(eq_a, eq_b, eq_budget, eq_out);
        if (cmd_hull->parsed()) {
            SeriesEncoding enc = encoding_from_json(slurp(hull_file));
            SupportHull hull = hull_vertices(enc, hull_budget);
            bool all_verified = true;
            for (const auto& sv : hull.vertices)
                if (!sv.verified) all_verified = false;
            std::vector<std::vector<ExpVec>> faces;
            if (all_verified) faces = bounded_faces(hull);
            json j;
            json vs = json::array();
            for (const auto& sv : hull.vertices) {
                json v;
                v["vertex"] = exp_json(sv.vertex);
                json gens = json::array();
                for (const auto& g : sv.cone.generators()) gens.push_back(exp_json(g));
                v["cone"] = gens;
                v["verified"] = sv.verified;
                v["edges"] = sv.edge_count;
                vs.push_back(v);
            }
            j["vertices"] = vs;
            json fs = json::array();
            for (const auto& face : faces) {
                json f = json::array();
                for (const auto& v : face) f.push_back(exp_json(v));
                fs.push_back(f);
            }
            j["bounded_faces"] = fs;
            j["all_verified"] = all_verified;
            emit(j.dump(2), hull_out);
            if (!hull_svg.empty()) emit(render_svg(hull, faces), hull_svg);
            return kExitOk;
        }
        if (cmd_add->parsed()) return run_combine(CombineOp::add, ar_a, ar_b, ar_order, ar_budget, ar_out);
        if (cmd_mul->parsed()) return run_combine(CombineOp::mul, ar_a, ar_b, ar_order, ar_budget, ar_out);
        if (cmd_inv->parsed())
            return run_combine(CombineOp::reciprocal, ar_a, ar_a, ar_order, ar_budget, ar_out);
        if (cmd_render->parsed()) {
            std::string text = slurp(render_file);
            json j = json::parse(text);
            if (j.contains("vertices")) {
                SupportHull hull;
                for (const auto& v : j.at("vertices")) {
                    SupportVertex sv;
                    std::vector<Rational> coords;
                    for (const auto& c : v.at("vertex")) coords.push_back(Rational::parse(c.get<std::string>()));
                    sv.vertex = ExpVec(std::move(coords));
                    std::vector<ExpVec> gens;
                    for (const auto& g : v.at("cone")) {
                        std::vector<Rational> gc;
                        for (const auto& c : g) gc.push_back(Rational::parse(c.get<std::string>()));
                        gens.push_back(ExpVec(std::move(gc)));
                    }
                    sv.cone = Cone(sv.vertex.size(), std::move(gens));
                    sv.verified = v.value("verified", true);
                    hull.vertices.push_back(std::move(sv));
                }
                std::vector<std::vector<ExpVec>> faces;
                for (const auto& f : j.value("bounded_faces", json::array())) {
                    std::vector<ExpVec> face;
                    for (const auto& v : f) {
                        std::vector<Rational> coords;
                        for (const auto& c : v) coords.push_back(Rational::parse(c.get<std::string>()));
                        face.push_back(ExpVec(std::move(coords)));
                    }
                    faces.push_back(std::move(face));
                }
                emit(render_svg(hull, faces), render_out);
            } else {
                SeriesEncoding enc = encoding_from_json(text);
                emit(render_svg(enc.bound), render_out);
            }
            return kExitOk;
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownVariable& e) {
        std::cerr << "unknown variable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
}
