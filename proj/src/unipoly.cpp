#include "puiseux/unipoly.hpp"

#include <algorithm>
#include <map>

#include "puiseux/errors.hpp"

namespace puiseux {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& k) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    UniPoly r = *this;
    std::vector<Rational> q(r.c_.size() > d.c_.size() ? r.c_.size() - d.c_.size() + 1 : 1,
                            Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational f = r.leading() / d.leading();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading());  // monic
    return a;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational a = coeff(i);
        if (a.is_zero()) continue;
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        if (i == 0 || a != Rational(1)) out += a.str();
        if (i > 0) {
            if (a != Rational(1)) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

bool miller_rabin(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return Integer(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEu);
    while (true) {
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer x = rng.get_z_range(n), y = x, d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    if (n <= 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// Divisors of n from its factorization, capped defensively.
std::vector<Integer> divisors(const Integer& n) {
    std::map<Integer, unsigned> fac;
    Integer m = abs(n);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (m % p == 0) {
            ++fac[Integer(p)];
            m /= p;
        }
    }
    factor_into(m, fac);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Integer pk(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > (1u << 20)) throw Error("too many divisor candidates");
    }
    return divs;
}

// Square-free decomposition (Yun): f = prod f_i^i with f_i square-free.
std::vector<UniPoly> yun(const UniPoly& f) {
    std::vector<UniPoly> out;
    UniPoly g = UniPoly::gcd(f, f.derivative());
    if (g.degree() <= 0) {
        out.push_back(f);
        return out;
    }
    UniPoly w = f.divmod(g).first;
    UniPoly s = f.derivative().divmod(g).first;
    UniPoly z = s - w.derivative();
    while (true) {
        UniPoly h = UniPoly::gcd(w, z);
        out.push_back(h);
        UniPoly w2 = w.divmod(h).first;
        UniPoly z2 = z.divmod(h).first - w2.derivative();
        w = std::move(w2);
        z = std::move(z2);
        if (w.degree() <= 0) break;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    std::map<Integer, unsigned> fac;
    factor_into(abs(n), fac);
    return {fac.begin(), fac.end()};
}

RootReport find_rational_roots(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("root search on zero polynomial");
    RootReport report;
    report.cofactor = UniPoly::constant(1);

    // Strip t^v: contributes the root 0 with multiplicity v.
    std::vector<Rational> cs = f.coeffs();
    std::size_t v = 0;
    while (v < cs.size() && cs[v].is_zero()) ++v;
    if (v > 0) {
        report.roots.emplace_back(Rational(0), static_cast<int>(v));
        cs.erase(cs.begin(), cs.begin() + static_cast<long>(v));
    }
    UniPoly g{std::vector<Rational>(cs)};
    if (g.degree() <= 0) return report;

    std::vector<UniPoly> layers = yun(g);
    UniPoly cofactor = UniPoly::constant(1);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        UniPoly part = layers[i];
        if (part.degree() <= 0) continue;
        // Integer-primitive form for the rational root test.
        Integer den = common_denominator(part.coeffs().begin(), part.coeffs().end());
        std::vector<Integer> ic;
        ic.reserve(part.coeffs().size());
        for (const auto& c : part.coeffs()) ic.push_back(c.num() * (den / c.den()));
        Integer content(0);
        for (const auto& c : ic) content = gcd(content, c);
        for (auto& c : ic) c /= content;

        std::vector<Integer> ps = divisors(ic.front());
        std::vector<Integer> qs = divisors(ic.back());
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sign : {1, -1}) {
                    Rational cand(sign > 0 ? p : -p, q);
                    if (!part(cand).is_zero()) continue;
                    report.roots.emplace_back(cand, static_cast<int>(i) + 1);
                    UniPoly lin({-cand, Rational(1)});
                    part = part.divmod(lin).first;
                }
            }
        }
        if (part.degree() > 0) {
            for (std::size_t k = 0; k <= i; ++k) cofactor = cofactor * part;
        }
    }
    report.cofactor = cofactor;
    std::sort(report.roots.begin(), report.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return report;
}

std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& f) {
    RootReport r = find_rational_roots(f);
    if (r.cofactor.degree() > 0) throw NonRationalRoots(r.cofactor.str());
    return r.roots;
}

}  // namespace puiseux
