#include "puiseux/svg.hpp"

#include <algorithm>
#include <sstream>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

struct Box {
    Rational xmin, xmax, ymin, ymax;
    bool empty = true;

    void add(const ExpVec& p) {
        if (empty) {
            xmin = xmax = p[0];
            ymin = ymax = p[1];
            empty = false;
            return;
        }
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
};

// Deterministic fixed-point decimal with three digits, exact arithmetic.
std::string fixed3(const Rational& r) {
    Integer scaled;
    mpz_class num = r.num() * 1000;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.den().get_mpz_t());
    bool neg = scaled < 0;
    Integer a = abs(scaled);
    Integer whole = a / 1000, frac = a % 1000;
    std::string f = frac.get_str();
    while (f.size() < 3) f = "0" + f;
    while (!f.empty() && f.back() == '0') f.pop_back();
    std::string out = (neg ? "-" : "") + whole.get_str();
    if (!f.empty()) out += "." + f;
    return out;
}

class Canvas {
  public:
    Canvas(const Box& box, int size) : size_(size) {
        Rational w = box.xmax - box.xmin, h = box.ymax - box.ymin;
        Rational span = std::max(w, h);
        if (span.is_zero()) span = 1;
        Rational margin = span / Rational(10);
        x0_ = box.xmin - margin;
        y1_ = box.ymax + margin;
        scale_ = Rational(size) / (span + margin * Rational(2));
    }

    std::string px(const ExpVec& p) const {
        Rational sx = (p[0] - x0_) * scale_;
        Rational sy = (y1_ - p[1]) * scale_;  // flip: svg y grows downward
        return fixed3(sx) + "," + fixed3(sy);
    }
    std::string x(const Rational& v) const { return fixed3((v - x0_) * scale_); }
    std::string y(const Rational& v) const { return fixed3((y1_ - v) * scale_); }

  private:
    int size_;
    Rational x0_, y1_, scale_;
};

void open_svg(std::ostringstream& out, int size) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
}

void wedge(std::ostringstream& out, const Canvas& canvas, const ExpVec& apex, const Cone& cone,
           const Rational& len) {
    if (cone.is_zero()) return;
    std::vector<ExpVec> tips;
    for (const auto& g : cone.generators()) {
        // normalize so every ray is drawn with the same reach
        Rational a0 = g[0].sign() < 0 ? -g[0] : g[0];
        Rational a1 = g[1].sign() < 0 ? -g[1] : g[1];
        Rational m = a0 > a1 ? a0 : a1;
        if (m.is_zero()) m = 1;
        ExpVec tip = apex + g.scaled(len / m);
        tips.push_back(tip);
        out << "  <line class=\"ray\" x1=\"" << canvas.x(apex[0]) << "\" y1=\""
            << canvas.y(apex[1]) << "\" x2=\"" << canvas.x(tip[0]) << "\" y2=\""
            << canvas.y(tip[1]) << "\" stroke=\"#4a7\" stroke-width=\"1.5\"/>\n";
    }
    if (tips.size() == 2) {
        out << "  <path class=\"wedge\" d=\"M " << canvas.px(apex) << " L " << canvas.px(tips[0])
            << " L " << canvas.px(tips[1]) << " Z\" fill=\"#4a7\" fill-opacity=\"0.15\""
            << " stroke=\"none\"/>\n";
    }
}

void dot(std::ostringstream& out, const Canvas& canvas, const ExpVec& p, const char* fill,
         double r) {
    out << "  <circle cx=\"" << canvas.x(p[0]) << "\" cy=\"" << canvas.y(p[1]) << "\" r=\"" << r
        << "\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string render_svg(const SupportHull& hull, const std::vector<std::vector<ExpVec>>& faces,
                       const SvgOptions& opts) {
    if (!hull.vertices.empty() && hull.vertices.front().vertex.size() != 2)
        throw UnsupportedDimension("svg rendering needs two variables");
    Box box;
    for (const auto& sv : hull.vertices) {
        box.add(sv.vertex);
        for (const auto& g : sv.cone.generators()) box.add(sv.vertex + g.scaled(opts.ray_length));
    }
    if (box.empty) box.add(ExpVec{Rational(0), Rational(0)});
    Canvas canvas(box, opts.size);
    std::ostringstream out;
    open_svg(out, opts.size);
    for (const auto& sv : hull.vertices) wedge(out, canvas, sv.vertex, sv.cone, opts.ray_length);
    for (const auto& face : faces) {
        if (face.size() != 2) continue;
        out << "  <line class=\"face\" x1=\"" << canvas.x(face[0][0]) << "\" y1=\""
            << canvas.y(face[0][1]) << "\" x2=\"" << canvas.x(face[1][0]) << "\" y2=\""
            << canvas.y(face[1][1]) << "\" stroke=\"#333\" stroke-width=\"2\"/>\n";
    }
    for (const auto& sv : hull.vertices)
        dot(out, canvas, sv.vertex, sv.verified ? "#d33" : "#fa0", 4.0);
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const ConeBound& bound, const SvgOptions& opts) {
    if (bound.anchor.size() != 2)
        throw UnsupportedDimension("svg rendering needs two variables");
    Box box;
    box.add(bound.anchor);
    for (const auto& e : bound.exceptional) box.add(e);
    for (const auto& g : bound.cone.generators()) box.add(bound.anchor + g.scaled(opts.ray_length));
    Canvas canvas(box, opts.size);
    std::ostringstream out;
    open_svg(out, opts.size);
    wedge(out, canvas, bound.anchor, bound.cone, opts.ray_length);
    for (const auto& e : bound.exceptional) dot(out, canvas, e, "#36c", 3.5);
    dot(out, canvas, bound.anchor, "#d33", 4.0);
    out << "</svg>\n";
    return out.str();
}

}  // namespace puiseux
