#include "puiseux/puiseux_poly.hpp"

#include <algorithm>
#include <sstream>

#include "puiseux/errors.hpp"

namespace puiseux {

bool ExpVec::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return r.is_zero(); });
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
    ExpVec r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const {
    ExpVec r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
}

ExpVec ExpVec::scaled(const Rational& c) const {
    ExpVec r(*this);
    for (auto& x : r.e_) x *= c;
    return r;
}

ExpVec ExpVec::extended(const Rational& last) const {
    ExpVec r(*this);
    r.e_.push_back(last);
    return r;
}

ExpVec ExpVec::truncated() const {
    ExpVec r(*this);
    r.e_.pop_back();
    return r;
}

bool operator<(const ExpVec& a, const ExpVec& b) {
    return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

std::string ExpVec::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += e_[i].str();
    }
    return s + ")";
}

PuiseuxPoly PuiseuxPoly::constant(int arity, const Rational& c) {
    PuiseuxPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<std::size_t>(arity)), c);
    return p;
}

PuiseuxPoly PuiseuxPoly::monomial(const ExpVec& alpha, const Rational& c) {
    PuiseuxPoly p(static_cast<int>(alpha.size()));
    if (!c.is_zero()) p.terms_.emplace(alpha, c);
    return p;
}

PuiseuxPoly PuiseuxPoly::variable(int arity, int i) {
    ExpVec e(static_cast<std::size_t>(arity));
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e, 1);
}

bool PuiseuxPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

std::vector<ExpVec> PuiseuxPoly::support() const {
    std::vector<ExpVec> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

Rational PuiseuxPoly::coeff(const ExpVec& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PuiseuxPoly::set_coeff(const ExpVec& alpha, const Rational& c) {
    if (c.is_zero())
        terms_.erase(alpha);
    else
        terms_[alpha] = c;
}

void PuiseuxPoly::add_term(const ExpVec& alpha, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PuiseuxPoly::check_arity(const PuiseuxPoly& o) const {
    if (arity_ != o.arity_)
        throw ArityMismatch("polynomial arity " + std::to_string(arity_) + " vs " +
                            std::to_string(o.arity_));
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    a.check_arity(b);
    PuiseuxPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

PuiseuxPoly PuiseuxPoly::scaled(const Rational& c) const {
    PuiseuxPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

PuiseuxPoly PuiseuxPoly::shifted(const ExpVec& alpha) const {
    PuiseuxPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + alpha, c);
    return r;
}

PuiseuxPoly PuiseuxPoly::pow(unsigned k) const {
    PuiseuxPoly r = constant(arity_, 1);
    PuiseuxPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Rational PuiseuxPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(arity_))
        throw ArityMismatch("evaluation point size mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (!e[i].is_integer())
                throw Error("cannot evaluate fractional exponent " + e[i].str());
            Integer k = e[i].num();
            bool neg = k < 0;
            if (neg) k = -k;
            if (!k.fits_ulong_p()) throw Error("exponent too large to evaluate");
            Rational p(1);
            Rational base = point[i];
            if (neg) {
                if (base.is_zero()) throw ZeroPolynomial("0 raised to negative power");
                base = Rational(1) / base;
            }
            for (unsigned long j = 0; j < k.get_ui(); ++j) p *= base;
            term *= p;
        }
        total += term;
    }
    return total;
}

PuiseuxPoly PuiseuxPoly::with_extra_variable() const {
    PuiseuxPoly r(arity_ + 1);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e.extended(0), c);
    return r;
}

ExpVec PuiseuxPoly::min_exponents() const {
    ExpVec m(static_cast<std::size_t>(arity_));
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            if (e[i] < m[i]) m[i] = e[i];
    }
    return m;
}

namespace {

void append_exponent(std::string& out, const std::string& var, const Rational& e) {
    out += var;
    if (e == Rational(1)) return;
    out += "^";
    if (e.is_integer() && e.sign() > 0)
        out += e.str();
    else
        out += "(" + e.str() + ")";
}

}  // namespace

std::string PuiseuxPoly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    if (vars.size() != static_cast<std::size_t>(arity_))
        throw ArityMismatch("variable name list size mismatch");
    std::string out;
    // Descending lexicographic order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        std::vector<std::string> pieces;
        if (a != Rational(1) || e.is_zero()) pieces.push_back(a.str());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i].is_zero()) continue;
            std::string piece;
            append_exponent(piece, vars[i], e[i]);
            pieces.push_back(piece);
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (i) out += "*";
            out += pieces[i];
        }
    }
    return out;
}

std::string PuiseuxPoly::str() const {
    std::vector<std::string> vars;
    for (int i = 0; i < arity_; ++i) vars.push_back("x" + std::to_string(i + 1));
    return str(vars);
}

}  // namespace puiseux
