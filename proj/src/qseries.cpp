#include "cyops/qseries.hpp"

#include <algorithm>

namespace cyops {

QSeries::QSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("QSeries: empty coefficient list");
}

QSeries::QSeries(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
    if (coeffs_.empty()) throw Error("QSeries: empty coefficient list");
}

QSeries QSeries::zero(int trunc) {
    return QSeries(std::vector<Rat>(trunc + 1, Rat(0)));
}

QSeries QSeries::one(int trunc) {
    QSeries s = zero(trunc);
    s.coeffs_[0] = 1;
    return s;
}

QSeries QSeries::identity(int trunc) {
    QSeries s = zero(trunc);
    if (trunc >= 1) s.coeffs_[1] = 1;
    return s;
}

QSeries QSeries::geometric(int trunc) {
    return QSeries(std::vector<Rat>(trunc + 1, Rat(1)));
}

QSeries QSeries::truncated(int new_trunc) const {
    if (new_trunc < 0) throw Error("QSeries::truncated: negative order");
    std::vector<Rat> c(coeffs_.begin(),
                       coeffs_.begin() + std::min<size_t>(new_trunc + 1, coeffs_.size()));
    c.resize(new_trunc + 1, Rat(0));
    return QSeries(std::move(c));
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

QSeries QSeries::shift(int k) const {
    if (k < 0) throw Error("QSeries::shift: negative shift");
    std::vector<Rat> c(coeffs_.size(), Rat(0));
    for (size_t i = 0; i + k < c.size(); ++i) c[i + k] = coeffs_[i];
    return QSeries(std::move(c));
}

QSeries QSeries::theta() const {
    std::vector<Rat> c(coeffs_.size());
    for (size_t n = 0; n < c.size(); ++n) c[n] = Rat(Int(n)) * coeffs_[n];
    return QSeries(std::move(c));
}

QSeries QSeries::dilate(int k) const {
    if (k < 1) throw Error("QSeries::dilate: k must be >= 1");
    std::vector<Rat> c(static_cast<size_t>(trunc()) * k + 1, Rat(0));
    for (size_t n = 0; n < coeffs_.size(); ++n) c[n * k] = coeffs_[n];
    return QSeries(std::move(c));
}

QSeries QSeries::rescale(const Rat& n) const {
    std::vector<Rat> c(coeffs_.size());
    Rat pw(1);
    for (size_t m = 0; m < c.size(); ++m) {
        c[m] = coeffs_[m] * pw;
        pw *= n;
    }
    return QSeries(std::move(c));
}

namespace {
int common_trunc(const QSeries& a, const QSeries& b) {
    return std::min(a.trunc(), b.trunc());
}
}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
    int m = common_trunc(a, b);
    std::vector<Rat> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[i] + b[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    int m = common_trunc(a, b);
    std::vector<Rat> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[i] - b[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a) {
    std::vector<Rat> c(a.coeffs());
    for (auto& v : c) v = -v;
    return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int m = common_trunc(a, b);
    std::vector<Rat> c(m + 1, Rat(0));
    for (int i = 0; i <= m; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= m; ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return QSeries(std::move(c));
}

QSeries operator*(const Rat& c, const QSeries& a) {
    std::vector<Rat> v(a.coeffs());
    for (auto& x : v) x *= c;
    return QSeries(std::move(v));
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    if (b[0] == 0) throw DivisionByZeroConstantTerm();
    int m = common_trunc(a, b);
    std::vector<Rat> c(m + 1);
    for (int n = 0; n <= m; ++n) {
        Rat s = a[n];
        for (int k = 1; k <= n; ++k) s -= b[k] * c[n - k];
        c[n] = s / b[0];
    }
    return QSeries(std::move(c));
}

bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs() == b.coeffs();
}

QSeries series_exp(const QSeries& a) {
    if (a[0] != 0) throw BadConstantTerm("exp requires constant term 0");
    int m = a.trunc();
    // e' = a' e gives n e_n = sum_{k=1..n} k a_k e_{n-k}.
    std::vector<Rat> e(m + 1, Rat(0));
    e[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Rat s(0);
        for (int k = 1; k <= n; ++k) s += Rat(Int(k)) * a[k] * e[n - k];
        e[n] = s / Rat(Int(n));
    }
    return QSeries(std::move(e));
}

QSeries series_log(const QSeries& a) {
    if (a[0] != 1) throw BadConstantTerm("log requires constant term 1");
    int m = a.trunc();
    // l' = a'/a, integrated termwise.
    std::vector<Rat> l(m + 1, Rat(0));
    for (int n = 1; n <= m; ++n) {
        Rat s = Rat(Int(n)) * a[n];
        for (int k = 1; k < n; ++k) s -= Rat(Int(k)) * l[k] * a[n - k];
        l[n] = s / Rat(Int(n));
    }
    return QSeries(std::move(l));
}

QSeries series_compose(const QSeries& outer, const QSeries& inner) {
    if (inner[0] != 0) throw BadConstantTerm("composition requires inner constant term 0");
    int m = common_trunc(outer, inner);
    QSeries in = inner.truncated(m);
    QSeries acc = QSeries::zero(m);
    for (int k = outer.trunc() < m ? outer.trunc() : m; k >= 0; --k) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

QSeries series_revert(const QSeries& a) {
    if (a[0] != 0) throw BadConstantTerm("reversion requires constant term 0");
    if (a.trunc() < 1 || a[1] == 0) throw NotInvertible("reversion requires nonzero linear term");
    int m = a.trunc();
    // Newton: g <- g - (a(g) - t)/a'(g), with the number of correct orders
    // doubling each pass. a'(g) has unit constant term a_1.
    std::vector<Rat> da(m + 1, Rat(0));
    for (int k = 1; k <= m; ++k) da[k - 1] = Rat(Int(k)) * a[k];
    QSeries deriv{std::vector<Rat>(da)};
    QSeries g = QSeries::zero(1);
    g.set(1, 1 / a[1]);
    int correct = 1;
    while (correct < m) {
        correct = std::min(2 * correct, m);
        g = g.truncated(correct);
        QSeries t = QSeries::identity(correct);
        QSeries err = series_compose(a.truncated(correct), g) - t;
        QSeries slope = series_compose(deriv.truncated(correct), g);
        g = g - err / slope;
    }
    return g;
}

QSeries hadamard_product(const QSeries& a, const QSeries& b) {
    int m = common_trunc(a, b);
    std::vector<Rat> c(m + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[i] * b[i];
    return QSeries(std::move(c));
}

}  // namespace cyops
