#include "puiseux/encoding.hpp"

#include <json.hpp>

#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/poly_algebra.hpp"

namespace puiseux {

namespace {

std::vector<std::string> default_vars(std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {"x"};
    if (n == 2) return {"x", "y"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

// Truncation terms sorted decreasing under the order.
std::vector<std::pair<ExpVec, Rational>> sorted_terms(const PuiseuxPoly& q, const OrderSpec& w) {
    return reorder_terms(q, w);
}

// Does the branch truncation extend q? q's terms must be exactly the
// leading |q| terms of the branch under w.
bool is_prefix(const PuiseuxPoly& q, const PuiseuxPoly& branch, const OrderSpec& w) {
    if (q.term_count() > branch.term_count()) return false;
    auto qs = reorder_terms(q, w);
    auto bs = reorder_terms(branch, w);
    for (std::size_t i = 0; i < qs.size(); ++i)
        if (qs[i] != bs[i]) return false;
    return true;
}

// The admissible w-compatible edge of NP(p) whose branches lead with the
// given exponent; null when none exists.
std::optional<Edge> edge_with_leading(const YPoly& p, const OrderSpec& w, const ExpVec& lead) {
    NewtonPolytope np = newton_polytope(p);
    for (const auto& e : np.admissible_edges()) {
        if (!(-slope(e) == lead)) continue;
        if (!dual_contains(barrier_cone(np.points(), e), w)) continue;
        return e;
    }
    return std::nullopt;
}

}  // namespace

YPoly normalize_annihilator(const YPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("zero annihilator");
    return scale_to_integer_primitive(primitive_part(squarefree_part(p)));
}

std::vector<SeriesEncoding> encode(const YPoly& p, const Edge& e, const OrderSpec& w, int k,
                                   std::vector<std::string> vars, std::string unknown) {
    YPoly pn = normalize_annihilator(p);
    if (vars.empty()) vars = default_vars(static_cast<std::size_t>(p.arity()));
    // Content removal may reshape the polytope; the matching edge of the
    // normalized annihilator is the compatible one with the same slope.
    ExpVec lead = -slope(e);
    auto en = edge_with_leading(pn, w, lead);
    if (!en)
        throw NotAdmissible("no compatible edge of the normalized annihilator has slope " +
                            slope(e).str());
    ExpansionResult res = expand(pn, *en, w, k);
    std::vector<SeriesEncoding> out;
    for (const auto& b : res.branches) {
        SeriesEncoding enc;
        enc.annihilator = pn;
        enc.order = w;
        enc.truncation = b.truncation;
        enc.bound = b.bound;
        enc.vars = vars;
        enc.unknown = unknown;
        out.push_back(std::move(enc));
    }
    return out;
}

namespace {

// Re-expand the annihilator and pick the unique branch extending the
// stored truncation.
SeriesEncoding rematch(const SeriesEncoding& enc, int k, int budget) {
    ExpVec lead = lexp_w(enc.truncation, enc.order);
    auto e = edge_with_leading(enc.annihilator, enc.order, lead);
    if (!e) throw NotAdmissible("no edge matches the truncation's leading exponent");
    ExpansionResult res = expand(enc.annihilator, *e, enc.order, k, budget);
    const ExpansionBranch* match = nullptr;
    for (const auto& b : res.branches) {
        if (!is_prefix(enc.truncation, b.truncation, enc.order)) continue;
        if (match) throw Error("truncation does not determine a unique branch");
        match = &b;
    }
    if (!match) throw Error("truncation does not match any series branch");
    SeriesEncoding out = enc;
    out.truncation = match->truncation;
    out.bound = match->bound;
    return out;
}

}  // namespace

SeriesEncoding refine(const SeriesEncoding& enc, int k, int budget) {
    if (enc.is_zero_series()) return enc;
    if (static_cast<int>(enc.truncation.term_count()) >= k) return enc;
    return rematch(enc, k, budget);
}

bool validate(const SeriesEncoding& enc) {
    try {
        if (enc.annihilator.is_zero() || enc.annihilator.is_constant_in_y()) return false;
        if (!squarefree_in_y(enc.annihilator)) return false;
        if (!enc.order.is_total()) return false;
        if (enc.is_zero_series()) return enc.annihilator.coeff(0).is_zero();
        ExpVec lead = lexp_w(enc.truncation, enc.order);
        auto e = edge_with_leading(enc.annihilator, enc.order, lead);
        if (!e) return false;
        ExpansionResult res =
            expand(enc.annihilator, *e, enc.order, static_cast<int>(enc.truncation.term_count()));
        int matches = 0;
        for (const auto& b : res.branches)
            if (is_prefix(enc.truncation, b.truncation, enc.order)) ++matches;
        return matches == 1;
    } catch (const Error&) {
        return false;
    }
}

SeriesEncoding zero_encoding(std::size_t n, const OrderSpec& w, std::vector<std::string> vars,
                             std::string unknown) {
    SeriesEncoding enc;
    enc.annihilator = YPoly::y(static_cast<int>(n));
    enc.order = w;
    enc.truncation = PuiseuxPoly(static_cast<int>(n));
    enc.bound.anchor = ExpVec(n);
    enc.bound.cone = Cone::zero(n);
    enc.vars = vars.empty() ? default_vars(n) : vars;
    enc.unknown = std::move(unknown);
    return enc;
}

namespace {

using nlohmann::json;

json exp_to_json(const ExpVec& e) {
    json a = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) a.push_back(e[i].str());
    return a;
}

ExpVec exp_from_json(const json& a) {
    ExpVec e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) e[i] = Rational::parse(a[i].get<std::string>());
    return e;
}

}  // namespace

std::string to_json(const SeriesEncoding& enc, int indent) {
    json j;
    j["vars"] = enc.vars;
    j["unknown"] = enc.unknown;
    j["annihilator"] = enc.annihilator.str(enc.vars, enc.unknown);
    json order;
    order["d"] = enc.order.radicand();
    json rows = json::array();
    for (const auto& row : enc.order.rows()) {
        json r = json::array();
        for (const auto& q : row)
            r.push_back({{"a", q.rational_part().str()}, {"b", q.radical_part().str()}});
        rows.push_back(r);
    }
    order["rows"] = rows;
    j["order"] = order;
    json trunc = json::array();
    for (const auto& [e, c] : sorted_terms(enc.truncation, enc.order))
        trunc.push_back({{"coeff", c.str()}, {"exp", exp_to_json(e)}});
    j["truncation"] = trunc;
    json bound;
    json exc = json::array();
    for (const auto& e : enc.bound.exceptional) exc.push_back(exp_to_json(e));
    bound["exceptional"] = exc;
    bound["anchor"] = exp_to_json(enc.bound.anchor);
    json gens = json::array();
    for (const auto& g : enc.bound.cone.generators()) gens.push_back(exp_to_json(g));
    bound["generators"] = gens;
    j["bound"] = bound;
    return j.dump(indent);
}

SeriesEncoding encoding_from_json(const std::string& text) {
    json j = json::parse(text);
    SeriesEncoding enc;
    enc.vars = j.at("vars").get<std::vector<std::string>>();
    enc.unknown = j.at("unknown").get<std::string>();
    enc.annihilator = parse_expression(j.at("annihilator").get<std::string>(), enc.vars, enc.unknown);
    long d = j.at("order").at("d").get<long>();
    std::vector<std::vector<QuadExt>> rows;
    for (const auto& r : j.at("order").at("rows")) {
        std::vector<QuadExt> row;
        for (const auto& q : r) {
            Rational a = Rational::parse(q.at("a").get<std::string>());
            Rational b = Rational::parse(q.at("b").get<std::string>());
            row.emplace_back(a, b, b.is_zero() ? 0 : d);
        }
        rows.push_back(std::move(row));
    }
    enc.order = OrderSpec(std::move(rows));
    std::size_t n = enc.vars.size();
    enc.truncation = PuiseuxPoly(static_cast<int>(n));
    for (const auto& t : j.at("truncation")) {
        enc.truncation.add_term(exp_from_json(t.at("exp")),
                                Rational::parse(t.at("coeff").get<std::string>()));
    }
    if (j.contains("bound")) {
        const auto& b = j.at("bound");
        for (const auto& e : b.at("exceptional")) enc.bound.exceptional.push_back(exp_from_json(e));
        enc.bound.anchor = exp_from_json(b.at("anchor"));
        std::vector<ExpVec> gens;
        for (const auto& g : b.at("generators")) gens.push_back(exp_from_json(g));
        enc.bound.cone = Cone(n, std::move(gens));
    } else if (!enc.truncation.is_zero()) {
        enc.bound = rematch(enc, static_cast<int>(enc.truncation.term_count()), 64).bound;
    } else {
        enc.bound.anchor = ExpVec(n);
        enc.bound.cone = Cone::zero(n);
    }
    return enc;
}

}  // namespace puiseux
