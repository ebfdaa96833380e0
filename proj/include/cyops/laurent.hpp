#pragma once

// Sparse Laurent polynomials in n variables and total-degree-truncated
// multivariate power series (dense within the simplex, stored sparsely).

#include <map>
#include <vector>

#include "cyops/qseries.hpp"
#include "cyops/rational.hpp"

namespace cyops {

using ExpVec = std::vector<int>;

class LaurentPoly {
public:
    explicit LaurentPoly(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(const ExpVec& e, const Rat& c);
    Rat coeff(const ExpVec& e) const;
    Rat constant_term() const { return coeff(ExpVec(dim_, 0)); }

    bool nonnegative() const;  // all exponents >= 0

    static LaurentPoly constant(int dim, const Rat& c);
    static LaurentPoly variable(int dim, int index, int power = 1);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly pow(int k) const;

private:
    int dim_;
    std::map<ExpVec, Rat> terms_;  // no zero coefficients stored
};

// Multivariate series truncated by total degree D; exponent vectors are
// nonnegative with component sum <= D.
class MSeries {
public:
    MSeries(int dim, int deg_bound) : dim_(dim), deg_(deg_bound) {}

    int dim() const { return dim_; }
    int deg_bound() const { return deg_; }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const Rat& c);
    Rat coeff(const ExpVec& e) const;

    friend MSeries operator+(const MSeries& a, const MSeries& b);
    friend MSeries operator-(const MSeries& a, const MSeries& b);
    friend MSeries operator*(const MSeries& a, const MSeries& b);
    friend bool operator==(const MSeries& a, const MSeries& b);

    static MSeries from_poly(const LaurentPoly& p, int deg_bound);

    // Diagonal sum_k a_{k..k} t^k, valid to order deg_bound/dim.
    QSeries diagonal() const;

private:
    int dim_;
    int deg_;
    std::map<ExpVec, Rat> terms_;
};

// Truncated expansion of P/Q to total degree D by geometric iteration on
// (Q(0)-Q)/Q(0); requires Q(0) != 0 (ZeroConstantDenominator) and
// nonnegative exponents in P and Q.
MSeries mseries_expand_rational(const LaurentPoly& P, const LaurentPoly& Q, int D);

}  // namespace cyops
