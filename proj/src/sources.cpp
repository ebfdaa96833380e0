#include "cyops/sources.hpp"

#include <algorithm>
#include <mutex>

namespace cyops {

QSeries factorial_ratio_series(const std::vector<int>& numerators,
                               const std::vector<int>& denominators, int order) {
    std::vector<Rat> a(order + 1);
    for (int n = 0; n <= order; ++n) {
        Int top(1), bot(1);
        for (int u : numerators) top *= factorial(static_cast<unsigned long>(u) * n);
        for (int v : denominators) bot *= factorial(static_cast<unsigned long>(v) * n);
        a[n] = make_rat(top, bot);
    }
    return QSeries(std::move(a));
}

bool factorial_ratio_balanced(const std::vector<int>& numerators,
                              const std::vector<int>& denominators) {
    long s = 0;
    for (int u : numerators) s += u;
    for (int v : denominators) s -= v;
    return s == 0;
}

AffineForm AffineForm::of(long constant, long n_coeff) {
    AffineForm f;
    f.constant = constant;
    f.n_coeff = n_coeff;
    return f;
}

AffineForm AffineForm::with(const std::string& index, long coeff) const {
    AffineForm f = *this;
    f.index_coeff[index] += coeff;
    return f;
}

Int AffineForm::eval(const Int& n, const std::map<std::string, Int>& idx) const {
    Int v = constant + n_coeff * n;
    for (const auto& [name, c] : index_coeff) {
        auto it = idx.find(name);
        if (it == idx.end()) throw UnboundedRegion("affine form references unbound index " + name);
        v += c * it->second;
    }
    return v;
}

namespace {

void binomial_sum_rec(const BinomialSumSpec& spec, size_t level, const Int& n,
                      std::map<std::string, Int>& idx, Rat& acc) {
    if (level == spec.indices.size()) {
        Int term(1);
        for (const auto& f : spec.factors) {
            Int b = binomial(f.top.eval(n, idx), f.bottom.eval(n, idx));
            if (b == 0) return;
            for (int k = 0; k < f.power; ++k) term *= b;
        }
        if (spec.sign_exponent) {
            Int e = spec.sign_exponent->eval(n, idx);
            if (e % 2 != 0) term = -term;
        }
        acc += Rat(term);
        return;
    }
    const IndexRange& rng = spec.indices[level];
    Int lo = rng.lo.eval(n, idx);
    Int hi = rng.hi.eval(n, idx);
    for (Int k = lo; k <= hi; ++k) {
        idx[rng.name] = k;
        binomial_sum_rec(spec, level + 1, n, idx, acc);
    }
    idx.erase(rng.name);
}

}  // namespace

QSeries binomial_sum_series(const BinomialSumSpec& spec, int order) {
    // validate that bounds reference only n and earlier indices
    std::vector<std::string> seen;
    for (const auto& rng : spec.indices) {
        for (const AffineForm* f : {&rng.lo, &rng.hi})
            for (const auto& [name, c] : f->index_coeff) {
                (void)c;
                if (std::find(seen.begin(), seen.end(), name) == seen.end())
                    throw UnboundedRegion("bound references later index " + name);
            }
        seen.push_back(rng.name);
    }
    std::vector<Rat> a(order + 1, Rat(0));
    for (int n = 0; n <= order; ++n) {
        std::map<std::string, Int> idx;
        binomial_sum_rec(spec, 0, Int(n), idx, a[n]);
    }
    return QSeries(std::move(a));
}

QSeries constant_term_series(const LaurentPoly& w, int order, size_t term_cap) {
    std::vector<Rat> a(order + 1, Rat(0));
    a[0] = 1;
    if (order == 0) return QSeries(std::move(a));
    int dim = w.dim();
    std::vector<int> lo(dim, 0), hi(dim, 0);
    for (const auto& [e, c] : w.terms()) {
        (void)c;
        for (int j = 0; j < dim; ++j) {
            lo[j] = std::min(lo[j], e[j]);
            hi[j] = std::max(hi[j], e[j]);
        }
    }
    LaurentPoly power = LaurentPoly::constant(dim, Rat(1));
    for (int k = 1; k <= order; ++k) {
        LaurentPoly next = power * w;
        // prune: e reachable back to 0 with the remaining order-k factors
        LaurentPoly pruned(dim);
        long remaining = order - k;
        for (const auto& [e, c] : next.terms()) {
            bool keep = true;
            for (int j = 0; j < dim && keep; ++j) {
                if (e[j] + remaining * hi[j] < 0) keep = false;
                if (e[j] + remaining * lo[j] > 0) keep = false;
            }
            if (keep) pruned.add_term(e, c);
        }
        if (pruned.terms().size() > term_cap)
            throw ResourceCap("constant_term_series: support exceeds term cap");
        a[k] = pruned.constant_term();
        power = std::move(pruned);
    }
    return QSeries(std::move(a));
}

QSeries diagonal_of_rational(const LaurentPoly& P, const LaurentPoly& Q, int order) {
    int D = Q.dim() * order;
    return mseries_expand_rational(P, Q, D).diagonal().truncated(order);
}

BiPoly BiPoly::dy() const {
    BiPoly d;
    for (int j = 1; j <= y_degree(); ++j) d.y_coeffs.push_back(Rat(Int(j)) * y_coeffs[j]);
    return d;
}

QSeries BiPoly::eval(const QSeries& t, const QSeries& y) const {
    int m = std::min(t.trunc(), y.trunc());
    QSeries acc = QSeries::zero(m);
    for (int j = y_degree(); j >= 0; --j) {
        acc = acc * y;
        // add coeff[j](t): polynomial evaluated on the series t
        QSeries c = QSeries::zero(m);
        const RatPoly& p = coeff(j);
        if (!p.is_zero()) {
            QSeries tp = QSeries::one(m);
            for (int k = 0; k <= p.degree(); ++k) {
                if (p.coeff(k) != 0) c = c + p.coeff(k) * tp;
                if (k < p.degree()) tp = tp * t;
            }
        }
        acc = acc + c;
    }
    return acc;
}

QSeries algebraic_series_solve(const BiPoly& R, int order) {
    if (R.eval00() != 0) throw Error("algebraic_series_solve: R(0,0) != 0");
    BiPoly Ry = R.dy();
    if (Ry.eval00() == 0) throw SingularBranch();
    QSeries t1 = QSeries::identity(1);
    QSeries phi = QSeries::zero(1);
    phi = phi - R.eval(t1, phi) / Ry.eval(t1, phi);
    int correct = 1;
    while (correct < order) {
        correct = std::min(2 * correct, order);
        phi = phi.truncated(correct);
        QSeries t = QSeries::identity(correct);
        phi = phi - R.eval(t, phi) / Ry.eval(t, phi);
    }
    return phi.truncated(order);
}

std::pair<LaurentPoly, LaurentPoly> furstenberg_embed(const BiPoly& R) {
    if (R.eval00() != 0) throw Error("furstenberg_embed: R(0,0) != 0");
    if (R.dy().eval00() == 0) throw SingularBranch();
    // R(xy, y) = y * G(x, y) with G(0,0) = dR/dy(0,0) != 0;
    // F = y^2 dR/dy(xy,y) / R(xy,y) = y dR/dy(xy,y) / G(x,y).
    LaurentPoly num(2), den(2);
    for (int j = 0; j <= R.y_degree(); ++j) {
        const RatPoly& p = R.coeff(j);
        for (int i = 0; p.degree() >= 0 && i <= p.degree(); ++i) {
            if (p.coeff(i) == 0) continue;
            // t^i y^j -> x^i y^{i+j}; divided by y: y^{i+j-1}
            den.add_term({i, i + j - 1}, p.coeff(i));
            // y * d/dy: j t^i y^{j-1} -> j x^i y^{i+j-1}; times y: y^{i+j}
            if (j > 0) num.add_term({i, i + j}, Rat(Int(j)) * p.coeff(i));
        }
    }
    return {num, den};
}

QSeries borel_laplace(const QSeries& a) {
    std::vector<Rat> b(a.trunc() + 1);
    for (int m = 0; m <= a.trunc(); ++m)
        b[m] = Rat(factorial(static_cast<unsigned long>(m))) * a[m];
    return QSeries(std::move(b));
}

Rat IntegerSequence::at(long n) const {
    if (n < 0) throw Error("IntegerSequence: negative index");
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(memo_.size())) return memo_[n];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(memo_.size()) <= n)
        memo_.push_back(gen_(static_cast<long>(memo_.size())));
    return memo_[n];
}

DworkReport dwork_check(const IntegerSequence& a, long p, int digits, long bound) {
    if (!is_prime(Int(p))) throw Error("dwork_check: p must be prime");
    long cap = 1;
    for (int i = 0; i < digits; ++i) cap *= p;
    bound = std::min(bound, cap);
    auto residue = [&](long n) {
        Rat v = a.at(n);
        if (!is_integer(v)) throw NonIntegralSequence("a_" + std::to_string(n));
        Int r = num(v) % p;
        if (r < 0) r += p;
        return r;
    };
    DworkReport rep;
    for (long n = 0; n <= bound; ++n) {
        Int lhs = residue(n);
        Int rhs(1);
        long rest = n;
        while (true) {
            rhs = (rhs * residue(rest % p)) % p;
            rest /= p;
            if (rest == 0) break;
        }
        if (lhs != rhs % p) {
            rep.ok = false;
            rep.first_failure = n;
            return rep;
        }
    }
    return rep;
}

Rat ramanujan_partial_sum(const IntegerSequence& A, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& z0, int terms) {
    Rat acc(0), zp(1);
    for (int n = 0; n < terms; ++n) {
        Rat nn{Int(n)};
        acc += A.at(n) * (a + b * nn + c * nn * nn) * zp;
        zp *= z0;
    }
    return acc;
}

namespace {

// arctan(1/x) * 10^prec by the alternating series; absolute error < 1 unit.
Int arctan_inv_scaled(long x, int prec) {
    Int scale = int_pow(10, static_cast<unsigned long>(prec));
    Int acc(0);
    Int power = scale / x;  // truncated; each term adds < 1 unit of error
    Int xx = Int(x) * x;
    long k = 0;
    while (power != 0) {
        Int term = power / (2 * k + 1);
        acc += (k % 2 == 0) ? term : -term;
        power /= xx;
        ++k;
    }
    return acc;
}

}  // namespace

Int pi_scaled(int digits) {
    int guard = 10;
    int prec = digits + guard;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    Int pi = 16 * arctan_inv_scaled(5, prec) - 4 * arctan_inv_scaled(239, prec);
    Int scale_down = int_pow(10, static_cast<unsigned long>(guard));
    // round to nearest at the guard boundary
    return (pi + scale_down / 2) / scale_down;
}

bool agrees_with_over_pi_squared(const Rat& value, const Rat& target_num, int digits) {
    int prec = digits + 20;
    Int pi = pi_scaled(prec);
    Int scale = int_pow(10, static_cast<unsigned long>(prec));
    // reference = target_num * scale^2 / pi^2, exact rational
    Rat reference = target_num * Rat(scale) * Rat(scale) / Rat(pi * pi);
    Rat diff = abs(value - reference);
    // the pi approximation itself contributes well under 10^-(digits+10)
    return diff < rat_pow(Rat(10), -digits);
}

}  // namespace cyops
