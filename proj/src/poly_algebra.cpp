#include "puiseux/poly_algebra.hpp"

#include <algorithm>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

// ---------------------------------------------------------------------
// Lattice normal form: exponents made non-negative integers by scaling
// each variable's exponents with the lcm of their denominators and
// shifting out the monomial part. Puiseux monomials are units, so all
// divisibility questions live in the lattice picture.
// ---------------------------------------------------------------------

struct LatticeForm {
    PuiseuxPoly poly;       // non-negative integer exponents
    ExpVec shift;           // original min exponents (pre-scaling)
    std::vector<Integer> scale;  // per-variable exponent multiplier
};

std::vector<Integer> common_scale(const std::vector<const PuiseuxPoly*>& polys, int arity) {
    std::vector<Integer> k(static_cast<std::size_t>(arity), Integer(1));
    for (const auto* p : polys)
        for (const auto& [e, c] : p->terms())
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = lcm(k[i], e[i].den());
    return k;
}

PuiseuxPoly apply_lattice(const PuiseuxPoly& f, const ExpVec& shift,
                          const std::vector<Integer>& scale) {
    PuiseuxPoly out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        ExpVec ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = (e[i] - shift[i]) * Rational(scale[i]);
        out.set_coeff(ne, c);
    }
    return out;
}

PuiseuxPoly undo_lattice(const PuiseuxPoly& f, const ExpVec& shift,
                         const std::vector<Integer>& scale) {
    PuiseuxPoly out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        ExpVec ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[i] = e[i] / Rational(scale[i]) + shift[i];
        out.set_coeff(ne, c);
    }
    return out;
}

// ---------------------------------------------------------------------
// Arithmetic on lattice polynomials (non-negative integer exponents).
// ---------------------------------------------------------------------

bool exponent_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Exact division assuming integer exponents; nullopt when not divisible.
std::optional<PuiseuxPoly> divide_lattice(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    if (g.is_zero()) return std::nullopt;
    PuiseuxPoly q(f.arity());
    PuiseuxPoly r = f;
    const auto& gt = *g.terms().rbegin();  // lex-leading term of g
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        if (!exponent_divides(gt.first, rt.first)) return std::nullopt;
        PuiseuxPoly t = PuiseuxPoly::monomial(rt.first - gt.first, rt.second / gt.second);
        q += t;
        r -= t * g;
    }
    return q;
}

int degree_in(const PuiseuxPoly& f, int v) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) {
        const Rational& x = e[static_cast<std::size_t>(v)];
        d = std::max(d, static_cast<int>(x.num().get_si()));
    }
    return d;
}

// Coefficients of f viewed as a polynomial in variable v; the v-slot of
// each coefficient's exponents is zeroed.
std::vector<PuiseuxPoly> collect_by_var(const PuiseuxPoly& f, int v) {
    std::vector<PuiseuxPoly> out;
    for (const auto& [e, c] : f.terms()) {
        std::size_t d = e[static_cast<std::size_t>(v)].num().get_ui();
        if (out.size() <= d) out.resize(d + 1, PuiseuxPoly(f.arity()));
        ExpVec base = e;
        base[static_cast<std::size_t>(v)] = 0;
        out[d].add_term(base, c);
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

PuiseuxPoly assemble_by_var(const std::vector<PuiseuxPoly>& coeffs, int v) {
    if (coeffs.empty()) return PuiseuxPoly();
    PuiseuxPoly out(coeffs.front().arity());
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [e, c] : coeffs[d].terms()) {
            ExpVec ne = e;
            ne[static_cast<std::size_t>(v)] = Rational(static_cast<long>(d));
            out.add_term(ne, c);
        }
    }
    return out;
}

// Sign normalization: lex-leading coefficient positive.
PuiseuxPoly normalize_leading(const PuiseuxPoly& f) {
    if (f.is_zero()) return f;
    if (f.terms().rbegin()->second.sign() < 0) return -f;
    return f;
}

// gcd of numerators over lcm of denominators: the exact rational content.
// Dividing by it leaves integer coefficients with no common factor, which
// keeps the primitive PRS from blowing up.
Rational rational_content(const PuiseuxPoly& f) {
    Integer num(0), den(1);
    for (const auto& [e, c] : f.terms()) {
        num = gcd(num, c.num());
        den = lcm(den, c.den());
    }
    if (num == 0) return Rational(0);
    return Rational(num, den);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.sign() < 0 ? -b : b;
    if (b.is_zero()) return a.sign() < 0 ? -a : a;
    return Rational(gcd(a.num(), b.num()), lcm(a.den(), b.den()));
}

PuiseuxPoly gcd_lattice(PuiseuxPoly f, PuiseuxPoly g);

PuiseuxPoly content_lattice(const std::vector<PuiseuxPoly>& coeffs) {
    PuiseuxPoly c;
    bool first = true;
    for (const auto& k : coeffs) {
        if (k.is_zero()) continue;
        if (first) {
            c = k;
            first = false;
            continue;
        }
        c = gcd_lattice(c, k);
    }
    return normalize_leading(c);
}

// Pseudo-remainder of dense coefficient vectors in one distinguished slot.
std::vector<PuiseuxPoly> prem_vec(std::vector<PuiseuxPoly> a, const std::vector<PuiseuxPoly>& b) {
    const PuiseuxPoly& lb = b.back();
    int e = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (a.size() >= b.size()) {
        PuiseuxPoly la = a.back();
        std::size_t k = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        --e;
        if (a.empty()) break;
    }
    for (; e > 0; --e)
        for (auto& c : a) c = c * lb;
    return a;
}

// Primitive PRS gcd. Both inputs are lattice polynomials. Constants carry
// their rational content so that recursive content removal keeps every
// remainder integer-primitive.
PuiseuxPoly gcd_lattice(PuiseuxPoly f, PuiseuxPoly g) {
    if (f.is_zero()) return normalize_leading(g);
    if (g.is_zero()) return normalize_leading(f);
    if (f.is_constant() || g.is_constant())
        return PuiseuxPoly::constant(f.arity(),
                                     rational_gcd(rational_content(f), rational_content(g)));

    int main = -1;
    for (int v = f.arity() - 1; v >= 0; --v) {
        if (degree_in(f, v) > 0 || degree_in(g, v) > 0) {
            main = v;
            break;
        }
    }
    if (main < 0) return PuiseuxPoly::constant(f.arity(), 1);

    if (degree_in(f, main) == 0) {
        auto gc = collect_by_var(g, main);
        return gcd_lattice(f, content_lattice(gc));
    }
    if (degree_in(g, main) == 0) {
        auto fc = collect_by_var(f, main);
        return gcd_lattice(g, content_lattice(fc));
    }

    auto fv = collect_by_var(f, main);
    auto gv = collect_by_var(g, main);
    PuiseuxPoly cf = content_lattice(fv);
    PuiseuxPoly cg = content_lattice(gv);
    PuiseuxPoly c = gcd_lattice(cf, cg);
    for (auto& k : fv) k = *divide_lattice(k, cf);
    for (auto& k : gv) k = *divide_lattice(k, cg);

    if (fv.size() < gv.size()) std::swap(fv, gv);
    while (true) {
        auto r = prem_vec(fv, gv);
        if (r.empty()) break;
        PuiseuxPoly rp = assemble_by_var(r, main);
        auto rv = collect_by_var(rp, main);
        PuiseuxPoly cr = content_lattice(rv);
        for (auto& k : rv) k = *divide_lattice(k, cr);
        fv = std::move(gv);
        gv = std::move(rv);
        if (gv.size() == 1) return normalize_leading(c);  // coprime in main var
    }
    PuiseuxPoly part = assemble_by_var(gv, main);
    return normalize_leading(part * c);
}

struct MonomialSplit {
    ExpVec shift;
    PuiseuxPoly stripped;  // lattice form, min exponent 0 in each variable
    std::vector<Integer> scale;
};

MonomialSplit split(const PuiseuxPoly& f, const std::vector<Integer>& scale) {
    MonomialSplit s;
    s.shift = f.min_exponents();
    s.scale = scale;
    s.stripped = apply_lattice(f, s.shift, scale);
    return s;
}

}  // namespace

std::optional<PuiseuxPoly> divide_exact(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return PuiseuxPoly(f.arity());
    auto scale = common_scale({&f, &g}, f.arity());
    MonomialSplit sf = split(f, scale), sg = split(g, scale);
    auto q = divide_lattice(sf.stripped, sg.stripped);
    if (!q) return std::nullopt;
    PuiseuxPoly out = undo_lattice(*q, ExpVec(sf.shift.size()), scale);
    return out.shifted(sf.shift - sg.shift);
}

PuiseuxPoly gcd(const PuiseuxPoly& f, const PuiseuxPoly& g) {
    if (f.is_zero()) return normalize_leading(g);
    if (g.is_zero()) return normalize_leading(f);
    auto scale = common_scale({&f, &g}, f.arity());
    MonomialSplit sf = split(f, scale), sg = split(g, scale);
    PuiseuxPoly core = gcd_lattice(sf.stripped, sg.stripped);
    ExpVec mono(sf.shift.size());
    for (std::size_t i = 0; i < mono.size(); ++i)
        mono[i] = std::min(sf.shift[i], sg.shift[i]);
    return undo_lattice(core, ExpVec(mono.size()), scale).shifted(mono);
}

PuiseuxPoly derivative(const PuiseuxPoly& f, int v) {
    PuiseuxPoly out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        const Rational& k = e[static_cast<std::size_t>(v)];
        if (k.is_zero()) continue;
        ExpVec ne = e;
        ne[static_cast<std::size_t>(v)] = k - 1;
        out.add_term(ne, c * k);
    }
    return out;
}

PuiseuxPoly content(const YPoly& p) {
    PuiseuxPoly c(p.arity());
    for (const auto& k : p.coeffs()) {
        if (k.is_zero()) continue;
        c = c.is_zero() ? k : gcd(c, k);
        if (c.is_constant()) break;
    }
    // Trailing-positive sign: the lexicographically smallest term of the
    // content is positive, so dividing preserves the textual shape of
    // typical inputs like (1-x).
    if (!c.is_zero() && c.terms().begin()->second.sign() < 0) c = -c;
    return c;
}

YPoly primitive_part(const YPoly& p) {
    if (p.is_zero()) return p;
    PuiseuxPoly c = content(p);
    if (c.is_constant() && c.min_exponents().is_zero()) return p;
    std::vector<PuiseuxPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& k : p.coeffs()) {
        auto q = divide_exact(k, c);
        if (!q) throw Error("content division failed");
        out.push_back(*q);
    }
    return YPoly(p.arity(), std::move(out));
}

bool squarefree_in_y(const YPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 0) return true;
    YPoly g = gcd(p, p.derivative_y());
    return g.degree() <= 0;
}

YPoly gcd(const YPoly& f, const YPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return YPoly::from_flat(gcd(f.flatten(), g.flatten()));
}

YPoly squarefree_part(const YPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_part of zero");
    PuiseuxPoly f = p.flatten();
    auto scale = common_scale({&f}, f.arity());
    MonomialSplit s = split(f, scale);

    PuiseuxPoly g = s.stripped;
    for (int v = 0; v < g.arity(); ++v) {
        if (g.is_constant()) break;
        if (degree_in(s.stripped, v) == 0) continue;
        g = gcd_lattice(g, derivative(s.stripped, v));
    }
    bool monomial_square_free = true;
    for (std::size_t i = 0; i < s.shift.size(); ++i)
        if (s.shift[i] > Rational(1)) monomial_square_free = false;
    if (g.is_constant() && monomial_square_free) return p;  // already square-free

    PuiseuxPoly core = s.stripped;
    if (!g.is_constant()) {
        auto q = divide_lattice(s.stripped, g);
        if (!q) throw Error("square-free division failed");
        core = *q;
    }
    PuiseuxPoly out = undo_lattice(core, ExpVec(s.shift.size()), scale);
    // Each variable dividing the monomial part is itself one distinct factor.
    ExpVec mono(s.shift.size());
    for (std::size_t i = 0; i < s.shift.size(); ++i)
        if (s.shift[i] >= Rational(1)) mono[i] = 1;
    out = out.shifted(mono);
    return scale_to_integer_primitive(YPoly::from_flat(out));
}

YPoly scale_to_integer_primitive(const YPoly& p) {
    if (p.is_zero()) return p;
    Integer den(1), num(0);
    for (const auto& c : p.coeffs())
        for (const auto& [e, v] : c.terms()) {
            den = lcm(den, v.den());
            num = gcd(num, v.num());
        }
    Rational factor{den, num};
    if (p.leading().terms().rbegin()->second.sign() < 0) factor = -factor;
    return p.scaled(factor);
}

PuiseuxPoly resultant_y(const YPoly& f, const YPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of zero polynomial");
    int n = f.arity();
    if (g.arity() != n) throw ArityMismatch("resultant arity mismatch");

    // Normalize coefficients to the integer lattice; Res(x^a f, g) differs
    // from Res(f, g) by the monomial x^(a deg g), undone at the end.
    PuiseuxPoly ff = f.flatten(), gf = g.flatten();
    auto scale = common_scale({&ff, &gf}, n + 1);
    scale[static_cast<std::size_t>(n)] = 1;  // y-degrees already integers
    ExpVec shift_f = ff.min_exponents(), shift_g = gf.min_exponents();
    shift_f[static_cast<std::size_t>(n)] = 0;
    shift_g[static_cast<std::size_t>(n)] = 0;
    YPoly A = YPoly::from_flat(apply_lattice(ff, shift_f, scale));
    YPoly B = YPoly::from_flat(apply_lattice(gf, shift_g, scale));

    ExpVec back = shift_f.truncated().scaled(Rational(static_cast<long>(g.degree()))) +
                  shift_g.truncated().scaled(Rational(static_cast<long>(f.degree())));

    // Undo the exponent scaling and restore the monomial factors
    // m_f^(deg g) * m_g^(deg f).
    auto lift = [&](const PuiseuxPoly& r) {
        PuiseuxPoly out(n);
        for (const auto& [e, c] : r.terms()) {
            ExpVec ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] / Rational(scale[i]);
            out.add_term(ne, c);
        }
        return out.shifted(back);
    };

    int s = 1;
    if (A.degree() == 0 && B.degree() == 0) return lift(PuiseuxPoly::constant(n, 1));
    if (A.degree() == 0) {
        PuiseuxPoly r = A.coeff(0).pow(static_cast<unsigned>(B.degree()));
        return lift(r);
    }
    if (B.degree() == 0) {
        return lift(B.coeff(0).pow(static_cast<unsigned>(A.degree())));
    }
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }

    auto prem = [](const YPoly& a, const YPoly& b) {
        YPoly r = a;
        const PuiseuxPoly& lb = b.leading();
        int e = a.degree() - b.degree() + 1;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            PuiseuxPoly lr = r.leading();
            int k = r.degree() - b.degree();
            // lr * y^k * b
            std::vector<PuiseuxPoly> cs(static_cast<std::size_t>(k), PuiseuxPoly(a.arity()));
            for (const auto& c : b.coeffs()) cs.push_back(c * lr);
            r = r.scaled_poly(lb) - YPoly(a.arity(), std::move(cs));
            --e;
        }
        for (; e > 0; --e) r = r.scaled_poly(lb);
        return r;
    };

    auto div_coeffs = [](const YPoly& a, const PuiseuxPoly& d) {
        std::vector<PuiseuxPoly> cs;
        cs.reserve(a.coeffs().size());
        for (const auto& c : a.coeffs()) {
            auto q = divide_exact(c, d);
            if (!q) throw Error("subresultant division failed");
            cs.push_back(*q);
        }
        return YPoly(a.arity(), std::move(cs));
    };

    PuiseuxPoly one = PuiseuxPoly::constant(n, 1);
    PuiseuxPoly gg = one, h = one;
    while (true) {
        int da = A.degree(), db = B.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        YPoly R = prem(A, B);
        A = B;
        PuiseuxPoly denom = gg;
        for (int i = 0; i < delta; ++i) denom = denom * h;
        B = R.is_zero() ? R : div_coeffs(R, denom);
        if (B.is_zero()) {
            if (A.degree() > 0) return PuiseuxPoly(n);  // common factor
            throw Error("unexpected subresultant state");
        }
        gg = A.leading();
        if (delta > 0) {
            PuiseuxPoly num = gg.pow(static_cast<unsigned>(delta));
            PuiseuxPoly den = h.pow(static_cast<unsigned>(delta - 1));
            auto q = divide_exact(num, den);
            if (!q) throw Error("subresultant h-update failed");
            h = *q;
        }
        if (B.degree() == 0) {
            int dA = A.degree();
            PuiseuxPoly num = B.coeff(0).pow(static_cast<unsigned>(dA));
            PuiseuxPoly den = h.pow(static_cast<unsigned>(dA - 1));
            auto q = divide_exact(num, den);
            if (!q) throw Error("subresultant final division failed");
            return lift(s < 0 ? -*q : *q);
        }
    }
}

}  // namespace puiseux
