#include "puiseux/cone.hpp"

#include <algorithm>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

// Solves sum_i lambda_i s_i = v with lambda >= 0 for a linearly independent
// candidate subset s by Gaussian elimination; |s| <= dim.
bool nonneg_combination(const std::vector<const ExpVec*>& s, const ExpVec& v, std::size_t dim) {
    std::size_t m = s.size();
    // Augmented dim x (m+1) system.
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < m; ++c) a[r][c] = (*s[c])[r];
        a[r][m] = v[r];
    }
    std::vector<long> pivot_col_of_row(dim, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < dim; ++c) {
        std::size_t p = row;
        while (p < dim && a[p][c].is_zero()) ++p;
        if (p == dim) continue;
        std::swap(a[row], a[p]);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[row][c];
            for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row[row] = static_cast<long>(c);
        ++row;
    }
    // Inconsistent rows?
    for (std::size_t r = row; r < dim; ++r)
        if (!a[r][m].is_zero()) return false;
    // Free columns mean the subset was dependent; skip those solutions
    // (an independent subset also witnesses membership, by Caratheodory).
    std::vector<Rational> lambda(m, Rational(0));
    std::vector<bool> pivoted(m, false);
    for (std::size_t r = 0; r < row; ++r) {
        long c = pivot_col_of_row[r];
        lambda[static_cast<std::size_t>(c)] = a[r][m] / a[r][static_cast<std::size_t>(c)];
        pivoted[static_cast<std::size_t>(c)] = true;
    }
    for (std::size_t c = 0; c < m; ++c)
        if (!pivoted[c] && m > row) {
            // dependent subset; rely on a smaller subset instead
            return false;
        }
    for (const auto& l : lambda)
        if (l.sign() < 0) return false;
    return true;
}

}  // namespace

ExpVec primitive_direction(const ExpVec& v) {
    if (v.is_zero()) return v;
    Integer den = common_denominator(v.entries().begin(), v.entries().end());
    Integer g(0);
    for (std::size_t i = 0; i < v.size(); ++i) g = gcd(g, v[i].num() * (den / v[i].den()));
    ExpVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer scaled = v[i].num() * (den / v[i].den());
        out[i] = Rational(Integer(scaled / g));
    }
    return out;
}

Cone::Cone(std::size_t dim, std::vector<ExpVec> generators) : dim_(dim) {
    for (auto& g : generators) {
        if (g.size() != dim_) throw ArityMismatch("cone generator dimension mismatch");
        if (g.is_zero()) continue;
        gens_.push_back(primitive_direction(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    // Remove generators already spanned by the others.
    for (std::size_t i = 0; i < gens_.size();) {
        std::vector<ExpVec> rest;
        for (std::size_t j = 0; j < gens_.size(); ++j)
            if (j != i) rest.push_back(gens_[j]);
        Cone probe;
        probe.dim_ = dim_;
        probe.gens_ = rest;
        if (probe.contains(gens_[i]))
            gens_.erase(gens_.begin() + static_cast<long>(i));
        else
            ++i;
    }
}

Cone Cone::from_points(std::size_t dim, const std::vector<ExpVec>& points) {
    return Cone(dim, points);
}

bool Cone::contains(const ExpVec& v) const {
    if (v.size() != dim_) throw ArityMismatch("cone point dimension mismatch");
    if (v.is_zero()) return true;
    if (gens_.empty()) return false;
    std::size_t cap = std::min<std::size_t>(dim_, gens_.size());
    // All subsets of size <= dim suffice (Caratheodory for cones).
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size <= cap; ++size) {
        idx.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<const ExpVec*> subset;
            for (auto i : idx) subset.push_back(&gens_[i]);
            if (nonneg_combination(subset, v, dim_)) return true;
            // next combination
            long k = static_cast<long>(size) - 1;
            while (k >= 0 && idx[static_cast<std::size_t>(k)] ==
                                 gens_.size() - size + static_cast<std::size_t>(k))
                --k;
            if (k < 0) break;
            ++idx[static_cast<std::size_t>(k)];
            for (std::size_t j = static_cast<std::size_t>(k) + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

bool Cone::is_line_free() const {
    for (const auto& g : gens_)
        if (contains(-g)) return false;
    return true;
}

Cone Cone::sum(const Cone& other) const {
    if (dim_ != other.dim_) throw ArityMismatch("cone sum dimension mismatch");
    std::vector<ExpVec> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return Cone(dim_, std::move(all));
}

std::string Cone::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].str();
    }
    return s + ">";
}

bool dual_contains(const Cone& c, const OrderSpec& w) {
    for (const auto& g : c.generators())
        if (w.sign_of(g) > 0) return false;
    return true;
}

std::optional<std::vector<Rational>> fm_solve(const std::vector<std::vector<Rational>>& a,
                                              const std::vector<Rational>& b) {
    if (a.empty()) return std::vector<Rational>{};
    std::size_t dim = a.front().size();
    if (dim == 0) {
        for (const auto& bi : b)
            if (bi.sign() < 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    // Eliminate the last variable.
    std::vector<std::vector<Rational>> next_a;
    std::vector<Rational> next_b;
    struct Bound {
        std::vector<Rational> coef;  // lower-dim coefficients
        Rational rhs;
    };
    std::vector<Bound> uppers, lowers;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational c = a[i][dim - 1];
        std::vector<Rational> rest(a[i].begin(), a[i].end() - 1);
        if (c.is_zero()) {
            next_a.push_back(rest);
            next_b.push_back(b[i]);
        } else if (c.sign() > 0) {
            // x <= (b - rest.w)/c
            for (auto& x : rest) x /= c;
            uppers.push_back({rest, b[i] / c});
        } else {
            // c < 0: x >= (a.w - b)/|c|
            Rational mc = -c;
            for (auto& x : rest) x /= mc;
            lowers.push_back({rest, -(b[i] / mc)});
        }
    }
    // After scaling, the bounds at a point w read
    //   lo.coef.w + lo.rhs <= x <= up.rhs - up.coef.w,
    // so each (lower, upper) pair yields (lo.coef + up.coef).w <= up.rhs - lo.rhs.
    for (const auto& up : uppers) {
        for (const auto& lo : lowers) {
            std::vector<Rational> row(dim - 1);
            for (std::size_t j = 0; j < dim - 1; ++j) row[j] = lo.coef[j] + up.coef[j];
            next_a.push_back(row);
            next_b.push_back(up.rhs - lo.rhs);
        }
    }
    auto sub = fm_solve(next_a, next_b);
    if (!sub) return std::nullopt;
    std::vector<Rational> w = *sub;
    w.resize(dim - 1);  // ensure length (fm_solve may return shorter for empty)
    // Bounds on the eliminated variable at the found point.
    std::optional<Rational> lo, hi;
    for (const auto& u : uppers) {
        Rational v = u.rhs;
        for (std::size_t j = 0; j < dim - 1; ++j) v -= u.coef[j] * w[j];
        if (!hi || v < *hi) hi = v;
    }
    for (const auto& l : lowers) {
        Rational v = l.rhs;
        for (std::size_t j = 0; j < dim - 1; ++j) v += l.coef[j] * w[j];
        if (!lo || v > *lo) lo = v;
    }
    Rational x(0);
    if (lo && hi)
        x = (*lo + *hi) / Rational(2);
    else if (hi)
        x = *hi;
    else if (lo)
        x = *lo;
    if (lo && hi && *lo > *hi) return std::nullopt;  // should not happen
    w.push_back(x);
    return w;
}

OrderSpec interior_order(const Cone& c) {
    if (!c.is_line_free()) throw NotLineFree("cone contains a line, dual has empty interior");
    std::size_t n = c.dim();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& g : c.generators()) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = g[i];
        a.push_back(std::move(row));
        b.emplace_back(-1);
    }
    if (a.empty()) {
        std::vector<Rational> zero(n, Rational(0));
        return OrderSpec::from_rational_rows({zero}, n);
    }
    auto w = fm_solve(a, b);
    if (!w) throw NotLineFree("no strictly dual-interior weight found");
    return OrderSpec::from_rational_rows({*w}, n);
}

}  // namespace puiseux
