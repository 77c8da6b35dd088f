#pragma once

#include <string>
#include <vector>

#include "puiseux/puiseux_poly.hpp"
#include "puiseux/quadext.hpp"

namespace puiseux {

/// A total order on Q^n realized as a generalized weight: a sequence of
/// rows over Q(sqrt(d)), compared lexicographically. Totality holds iff
/// the rational matrix stacking each row's rational and sqrt(d) parts has
/// rank n over Q.
class OrderSpec {
  public:
    OrderSpec() = default;
    explicit OrderSpec(std::vector<std::vector<QuadExt>> rows);

    /// Single row, auto-completed with unit tie-break rows when it does not
    /// already realize a total order.
    static OrderSpec from_row(std::vector<QuadExt> row);
    /// Purely rational rows followed by unit tie-break rows.
    static OrderSpec from_rational_rows(const std::vector<std::vector<Rational>>& rows,
                                        std::size_t n);

    std::size_t arity() const { return rows_.empty() ? 0 : rows_.front().size(); }
    const std::vector<std::vector<QuadExt>>& rows() const { return rows_; }
    /// Radicand shared by the rows (0 when purely rational).
    long radicand() const;

    bool is_total() const;

    /// Compares alpha and beta: -1 when alpha is smaller, 0 iff equal.
    int compare(const ExpVec& alpha, const ExpVec& beta) const;
    bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }
    bool leq(const ExpVec& a, const ExpVec& b) const { return compare(a, b) <= 0; }

    /// Sign of <v, row_i> scanned lexicographically; the sign of v itself
    /// under the order (compare(v, 0)).
    int sign_of(const ExpVec& v) const;

    std::string str() const;

    friend bool operator==(const OrderSpec& a, const OrderSpec& b) { return a.rows_ == b.rows_; }

  private:
    std::vector<std::vector<QuadExt>> rows_;
};

int order_compare(const OrderSpec& w, const ExpVec& alpha, const ExpVec& beta);

/// W-maximal exponent of the support of q.
ExpVec lexp_w(const PuiseuxPoly& q, const OrderSpec& w);
/// W-minimal exponent of the support of q.
ExpVec ord_w(const PuiseuxPoly& q, const OrderSpec& w);

/// Terms of q sorted strictly decreasing under w.
std::vector<std::pair<ExpVec, Rational>> reorder_terms(const PuiseuxPoly& q, const OrderSpec& w);

}  // namespace puiseux
