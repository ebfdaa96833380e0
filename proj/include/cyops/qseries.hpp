#pragma once

// Truncated univariate power series over Q with explicit truncation order.
// A QSeries holds coefficients a_0..a_M exactly; M ("trunc") is part of the
// value and every operation states the truncation of its result. Binary
// operations return the common (minimum) truncation.

#include <initializer_list>
#include <vector>

#include "cyops/rational.hpp"

namespace cyops {

class QSeries {
public:
    QSeries() : coeffs_{Rat(0)} {}
    explicit QSeries(std::vector<Rat> coeffs);
    QSeries(std::initializer_list<Rat> coeffs);

    static QSeries zero(int trunc);
    static QSeries one(int trunc);
    static QSeries identity(int trunc);  // the series t
    // a geometric-series convenience: 1/(1-t) to the given order
    static QSeries geometric(int trunc);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int k) const { return coeffs_[k]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    void set(int k, const Rat& v) { coeffs_.at(k) = v; }

    // Same coefficients, re-truncated; extending pads with zeros and is only
    // meaningful when the caller knows the tail vanishes.
    QSeries truncated(int new_trunc) const;

    bool is_zero() const;
    QSeries shift(int k) const;           // multiply by t^k (k >= 0)
    QSeries theta() const;                // t d/dt, coefficientwise n*a_n
    QSeries dilate(int k) const;          // t -> t^k, trunc scales by k
    QSeries rescale(const Rat& n) const;  // t -> n*t

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator/(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rat& c, const QSeries& a);
    friend bool operator==(const QSeries& a, const QSeries& b);

private:
    std::vector<Rat> coeffs_;  // exactly trunc+1 entries
};

// Formal exp; requires a_0 = 0 (BadConstantTerm otherwise).
QSeries series_exp(const QSeries& a);
// Formal log; requires a_0 = 1 (BadConstantTerm otherwise).
QSeries series_log(const QSeries& a);

// outer(inner); requires inner_0 = 0. Exact to the common truncation.
QSeries series_compose(const QSeries& outer, const QSeries& inner);

// Compositional inverse: b with a(b(t)) = t to truncation. Requires a_0 = 0
// and a_1 != 0 (NotInvertible). Exact Newton iteration, doubling the number
// of correct orders each step.
QSeries series_revert(const QSeries& a);

// Coefficientwise product c_n = a_n b_n.
QSeries hadamard_product(const QSeries& a, const QSeries& b);

}  // namespace cyops
