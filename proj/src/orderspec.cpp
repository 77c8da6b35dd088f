#include "puiseux/orderspec.hpp"

#include <algorithm>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

// Rank of a rational matrix by Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    if (m.empty()) return 0;
    std::size_t cols = m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

OrderSpec::OrderSpec(std::vector<std::vector<QuadExt>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error("order spec needs at least one row");
    std::size_t n = rows_.front().size();
    long d = 0;
    for (const auto& row : rows_) {
        if (row.size() != n) throw ArityMismatch("order rows of unequal length");
        for (const auto& e : row) {
            if (e.is_rational()) continue;
            if (d == 0)
                d = e.radicand();
            else if (d != e.radicand())
                throw MismatchedRadicand("order rows mix radicands");
        }
    }
    if (!is_total()) throw Error("order spec does not define a total order on Q^n");
}

OrderSpec OrderSpec::from_row(std::vector<QuadExt> row) {
    std::size_t n = row.size();
    std::vector<std::vector<QuadExt>> rows{std::move(row)};
    // Tentative: the single row may already be total (n <= 2 with an
    // irrational entry, say). Otherwise append unit tie-breaks.
    {
        OrderSpec probe;
        probe.rows_ = rows;
        if (probe.is_total()) return OrderSpec(std::move(rows));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<QuadExt> unit(n, QuadExt(Rational(0)));
        unit[i] = QuadExt(Rational(1));
        rows.push_back(std::move(unit));
    }
    return OrderSpec(std::move(rows));
}

OrderSpec OrderSpec::from_rational_rows(const std::vector<std::vector<Rational>>& rat_rows,
                                        std::size_t n) {
    std::vector<std::vector<QuadExt>> rows;
    for (const auto& r : rat_rows) {
        std::vector<QuadExt> row;
        row.reserve(n);
        for (const auto& x : r) row.emplace_back(x);
        rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<QuadExt> unit(n, QuadExt(Rational(0)));
        unit[i] = QuadExt(Rational(1));
        rows.push_back(std::move(unit));
    }
    return OrderSpec(std::move(rows));
}

long OrderSpec::radicand() const {
    for (const auto& row : rows_)
        for (const auto& e : row)
            if (!e.is_rational()) return e.radicand();
    return 0;
}

bool OrderSpec::is_total() const {
    if (rows_.empty()) return false;
    std::size_t n = rows_.front().size();
    std::vector<std::vector<Rational>> stacked;
    for (const auto& row : rows_) {
        std::vector<Rational> a(n), b(n);
        bool has_b = false;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = row[i].rational_part();
            b[i] = row[i].radical_part();
            if (!b[i].is_zero()) has_b = true;
        }
        stacked.push_back(std::move(a));
        if (has_b) stacked.push_back(std::move(b));
    }
    return rank(std::move(stacked)) == n;
}

int OrderSpec::sign_of(const ExpVec& v) const {
    if (v.size() != arity()) throw ArityMismatch("exponent arity mismatch in order comparison");
    for (const auto& row : rows_) {
        QuadExt dot;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (v[i].is_zero()) continue;
            dot += row[i] * QuadExt(v[i]);
        }
        int s = dot.sign();
        if (s != 0) return s;
    }
    return 0;
}

int OrderSpec::compare(const ExpVec& alpha, const ExpVec& beta) const {
    return sign_of(alpha - beta);
}

std::string OrderSpec::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) s += ";";
        s += "(";
        for (std::size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) s += ",";
            s += rows_[r][i].str();
        }
        s += ")";
    }
    return s;
}

int order_compare(const OrderSpec& w, const ExpVec& alpha, const ExpVec& beta) {
    return w.compare(alpha, beta);
}

ExpVec lexp_w(const PuiseuxPoly& q, const OrderSpec& w) {
    if (q.is_zero()) throw ZeroPolynomial("leading exponent of zero");
    const ExpVec* best = nullptr;
    for (const auto& [e, c] : q.terms())
        if (!best || w.less(*best, e)) best = &e;
    return *best;
}

ExpVec ord_w(const PuiseuxPoly& q, const OrderSpec& w) {
    if (q.is_zero()) throw ZeroPolynomial("order of zero");
    const ExpVec* best = nullptr;
    for (const auto& [e, c] : q.terms())
        if (!best || w.less(e, *best)) best = &e;
    return *best;
}

std::vector<std::pair<ExpVec, Rational>> reorder_terms(const PuiseuxPoly& q, const OrderSpec& w) {
    std::vector<std::pair<ExpVec, Rational>> terms(q.terms().begin(), q.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return w.less(b.first, a.first); });
    return terms;
}

}  // namespace puiseux
