#pragma once

// Solutions at a MUM point. The holomorphic solution comes from the plain
// coefficient recurrence; the full Frobenius basis from the same recurrence
// run over Q[rho]/(rho^n), where rho is the Frobenius deformation parameter:
// y(t, rho) = sum a_m(rho) t^{m+rho} and y_k = (1/k!) d^k/drho^k at rho = 0,
// i.e. y_k = sum_{j<=k} log(t)^j / j! * f_{k-j} with f_k = sum [rho^k] a_m t^m.

#include <vector>

#include "cyops/qseries.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

// Truncated polynomials in a nilpotent symbol (rho^n = 0).
class RhoPoly {
public:
    RhoPoly(int n, const Rat& c0 = Rat(0)) : c_(n, Rat(0)) {
        if (n < 1) throw Error("RhoPoly: modulus must be >= 1");
        c_[0] = c0;
    }

    int modulus() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int k) const { return c_.at(k); }
    void set(int k, const Rat& v) { c_.at(k) = v; }
    bool is_zero() const;

    RhoPoly inverse() const;  // requires unit constant term

    friend RhoPoly operator+(const RhoPoly& a, const RhoPoly& b);
    friend RhoPoly operator-(const RhoPoly& a, const RhoPoly& b);
    friend RhoPoly operator*(const RhoPoly& a, const RhoPoly& b);
    friend RhoPoly operator*(const Rat& s, const RhoPoly& a);
    friend bool operator==(const RhoPoly& a, const RhoPoly& b);

private:
    std::vector<Rat> c_;
};

// P(m + rho) in Q[rho]/(rho^n).
RhoPoly eval_at_shifted_rho(const RatPoly& p, const Rat& m, int n);

// True iff P_0(Theta) = c Theta^order.
bool mum_check(const ThetaOperator& op);

// Power series solution a_0 = 1, P_0(m) a_m = -sum_{i>=1} P_i(m-i) a_{m-i};
// NotMUM unless mum_check passes.
QSeries holomorphic_solution(const ThetaOperator& op, int order);

struct FrobeniusBasis {
    int n = 0;                   // operator order
    std::vector<QSeries> parts;  // f_0..f_{n-1}, f_0(0) = 1, f_k(0) = 0
    const QSeries& part(int k) const { return parts.at(k); }
};

FrobeniusBasis frobenius_basis(const ThetaOperator& op, int order);

// Series with log-degree grading: sum_j log(t)^j * comp[j](t). Supports the
// substitution checks (the operator acts through Theta(log^j g) =
// j log^{j-1} g + log^j Theta g).
struct LogSeries {
    std::vector<QSeries> comps;

    int log_degree() const { return static_cast<int>(comps.size()) - 1; }
    bool is_zero() const;
    LogSeries theta() const;
    LogSeries shift(int k) const;  // multiply by t^k

    friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const Rat& s, const LogSeries& a);
};

// y_k as a LogSeries (components are f_{k-j} / j! at log-degree j).
LogSeries basis_element(const FrobeniusBasis& fb, int k);

// Formal substitution of a log-series into the operator.
LogSeries apply_operator(const ThetaOperator& op, const LogSeries& s);

}  // namespace cyops
