#include "puiseux/ypoly.hpp"

#include "puiseux/errors.hpp"

namespace puiseux {

YPoly::YPoly(int arity, std::vector<PuiseuxPoly> coeffs) : arity_(arity), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.arity() != arity_) throw ArityMismatch("coefficient arity mismatch");
    trim();
}

YPoly YPoly::constant(int arity, const PuiseuxPoly& c) {
    YPoly p(arity);
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

YPoly YPoly::y(int arity) {
    YPoly p(arity);
    p.coeffs_.push_back(PuiseuxPoly(arity));
    p.coeffs_.push_back(PuiseuxPoly::constant(arity, 1));
    return p;
}

PuiseuxPoly YPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return PuiseuxPoly(arity_);
    return coeffs_[static_cast<std::size_t>(j)];
}

const PuiseuxPoly& YPoly::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void YPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void YPoly::check_arity(const YPoly& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("ypoly arity mismatch");
}

YPoly YPoly::operator-() const {
    YPoly r(arity_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

YPoly& YPoly::operator+=(const YPoly& o) {
    check_arity(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), PuiseuxPoly(arity_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    check_arity(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), PuiseuxPoly(arity_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
    a.check_arity(b);
    if (a.is_zero() || b.is_zero()) return YPoly(a.arity_);
    YPoly r(a.arity_);
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, PuiseuxPoly(a.arity_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

YPoly YPoly::scaled(const Rational& c) const {
    YPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& k : coeffs_) r.coeffs_.push_back(k.scaled(c));
    return r;
}

YPoly YPoly::scaled_poly(const PuiseuxPoly& c) const {
    YPoly r(arity_);
    if (c.is_zero()) return r;
    for (const auto& k : coeffs_) r.coeffs_.push_back(k * c);
    r.trim();
    return r;
}

YPoly YPoly::derivative_y() const {
    YPoly r(arity_);
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        r.coeffs_.push_back(coeffs_[j].scaled(Rational(static_cast<long>(j))));
    r.trim();
    return r;
}

YPoly YPoly::substitute_shift(const PuiseuxPoly& q) const {
    if (q.arity() != arity_) throw ArityMismatch("shift arity mismatch");
    // p(x, q + y) = sum_j c_j (q + y)^j; the y^i coefficient collects
    // binom(j, i) c_j q^(j-i).
    int d = degree();
    if (d < 0) return YPoly(arity_);
    // Powers of q up to d.
    std::vector<PuiseuxPoly> qpow;
    qpow.push_back(PuiseuxPoly::constant(arity_, 1));
    for (int j = 1; j <= d; ++j) qpow.push_back(qpow.back() * q);
    // Binomial table.
    std::vector<std::vector<Integer>> binom(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        binom[j].resize(static_cast<std::size_t>(j) + 1);
        binom[j][0] = 1;
        binom[j][static_cast<std::size_t>(j)] = 1;
        for (int i = 1; i < j; ++i) binom[j][i] = binom[j - 1][i - 1] + binom[j - 1][i];
    }
    YPoly r(arity_);
    r.coeffs_.assign(static_cast<std::size_t>(d) + 1, PuiseuxPoly(arity_));
    for (int j = 0; j <= d; ++j) {
        if (coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
        for (int i = 0; i <= j; ++i) {
            PuiseuxPoly part = coeffs_[static_cast<std::size_t>(j)].scaled(Rational(binom[j][i]));
            r.coeffs_[static_cast<std::size_t>(i)] += part * qpow[static_cast<std::size_t>(j - i)];
        }
    }
    r.trim();
    return r;
}

PuiseuxPoly YPoly::evaluate_y(const PuiseuxPoly& q) const {
    if (q.arity() != arity_) throw ArityMismatch("evaluation arity mismatch");
    PuiseuxPoly r(arity_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
    return r;
}

YPoly YPoly::reversed() const {
    YPoly r(arity_);
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    r.trim();
    return r;
}

PuiseuxPoly YPoly::flatten() const {
    PuiseuxPoly f(arity_ + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        for (const auto& [e, c] : coeffs_[j].terms())
            f.add_term(e.extended(Rational(static_cast<long>(j))), c);
    return f;
}

YPoly YPoly::from_flat(const PuiseuxPoly& f) {
    int n = f.arity() - 1;
    if (n < 0) throw ArityMismatch("from_flat needs arity >= 1");
    YPoly r(n);
    for (const auto& [e, c] : f.terms()) {
        const Rational& yd = e[static_cast<std::size_t>(n)];
        if (!yd.is_integer() || yd.sign() < 0)
            throw Error("y-degree must be a non-negative integer, got " + yd.str());
        std::size_t j = yd.num().get_ui();
        if (r.coeffs_.size() <= j) r.coeffs_.resize(j + 1, PuiseuxPoly(n));
        r.coeffs_[j].add_term(e.truncated(), c);
    }
    r.trim();
    return r;
}

std::string YPoly::str(const std::vector<std::string>& vars, const std::string& unknown) const {
    std::vector<std::string> all = vars;
    all.push_back(unknown);
    return flatten().str(all);
}

YPoly substitute_shift(const YPoly& p, const PuiseuxPoly& q) { return p.substitute_shift(q); }
PuiseuxPoly evaluate_y(const YPoly& p, const PuiseuxPoly& q) { return p.evaluate_y(q); }

}  // namespace puiseux
