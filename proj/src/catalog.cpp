#include "cyops/catalog.hpp"

namespace cyops {

namespace {

RatPoly T(long c0 = 0, long c1 = 1) { return RatPoly{Rat(c0), Rat(c1)}; }

RatPoly theta_pow(int k) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (int i = 0; i < k; ++i) p = p * T();
    return p;
}

RatPoly from_coeffs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

}  // namespace

ThetaOperator corpus_operator(const std::string& name) {
    if (name == "quintic") {
        // Theta^4 - 5t (5Theta+1)(5Theta+2)(5Theta+3)(5Theta+4)
        RatPoly p1 = Rat(-5) * (T(1, 5) * T(2, 5) * T(3, 5) * T(4, 5));
        return ThetaOperator({theta_pow(4), p1}).canonical();
    }
    if (name == "aesz15") {
        // Theta^4 - 3t(3T+1)(3T+2)(7T^2+7T+2) - 72t^2(3T+5)(3T+4)(3T+2)(3T+1)
        RatPoly p1 = Rat(-3) * (T(1, 3) * T(2, 3) * from_coeffs({2, 7, 7}));
        RatPoly p2 = Rat(-72) * (T(5, 3) * T(4, 3) * T(2, 3) * T(1, 3));
        return ThetaOperator({theta_pow(4), p1, p2}).canonical();
    }
    if (name == "aesz22") {
        // 49 Theta^4 - 7t(155T^4+286T^3+234T^2+91T+14)
        //   - t^2(16105T^4+68044T^3+102261T^2+66094T+15736)
        //   + 8t^3(2625T^4+8589T^3+9071T^2+3759T+476)
        //   - 16t^4(465T^4+1266T^3+1439T^2+806T+184) + 512 t^5 (T+1)^4
        RatPoly p0 = Rat(49) * theta_pow(4);
        RatPoly p1 = Rat(-7) * from_coeffs({14, 91, 234, 286, 155});
        RatPoly p2 = Rat(-1) * from_coeffs({15736, 66094, 102261, 68044, 16105});
        RatPoly p3 = Rat(8) * from_coeffs({476, 3759, 9071, 8589, 2625});
        RatPoly p4 = Rat(-16) * from_coeffs({184, 806, 1439, 1266, 465});
        RatPoly p5 = Rat(512) * (T(1, 1) * T(1, 1) * T(1, 1) * T(1, 1));
        return ThetaOperator({p0, p1, p2, p3, p4, p5}).canonical();
    }
    if (name == "aesz25") {
        // Theta^4 - 4t(2T+1)^2(11T^2+11T+3) - 16t^2(2T+1)^2(2T+3)^2
        RatPoly p1 = Rat(-4) * (T(1, 2) * T(1, 2) * from_coeffs({3, 11, 11}));
        RatPoly p2 = Rat(-16) * (T(1, 2) * T(1, 2) * T(3, 2) * T(3, 2));
        return ThetaOperator({theta_pow(4), p1, p2}).canonical();
    }
    if (name == "aesz245") {
        // Theta^4 - t(216T^4+396T^3+366T^2+168T+30) + 36t^2(3T+2)^2(6T+7)^2
        RatPoly p1 = Rat(-1) * from_coeffs({30, 168, 366, 396, 216});
        RatPoly p2 = Rat(36) * (T(2, 3) * T(2, 3) * T(7, 6) * T(7, 6));
        return ThetaOperator({theta_pow(4), p1, p2}).canonical();
    }
    if (name == "bogner") {
        // Theta^4 - 8t(2T+1)^2(5T^2+5T+2) + 192t^2(2T+1)(3T+2)(3T+4)(2T+3)
        RatPoly p1 = Rat(-8) * (T(1, 2) * T(1, 2) * from_coeffs({2, 5, 5}));
        RatPoly p2 = Rat(192) * (T(1, 2) * T(2, 3) * T(4, 3) * T(3, 2));
        return ThetaOperator({theta_pow(4), p1, p2}).canonical();
    }
    if (name == "euler") {
        // Theta^2 - t^2(Theta-1)(Theta+1)
        return ThetaOperator({theta_pow(2), RatPoly(), Rat(-1) * (T(-1, 1) * T(1, 1))})
            .canonical();
    }
    if (name == "legendre") {
        // Theta^2 - t^2(Theta+1)^2
        return ThetaOperator({theta_pow(2), RatPoly(), Rat(-1) * (T(1, 1) * T(1, 1))})
            .canonical();
    }
    if (name == "theta5-t") {
        return ThetaOperator({theta_pow(5), RatPoly::constant(Rat(-1))}).canonical();
    }
    throw Error("unknown corpus operator: " + name);
}

std::vector<std::string> corpus_operator_names() {
    return {"quintic", "aesz15", "aesz22", "aesz25", "aesz245",
            "bogner",  "euler",  "legendre", "theta5-t"};
}

BinomialSumSpec apery_spec() {
    BinomialSumSpec spec;
    spec.indices.push_back({"k", AffineForm::of(0), AffineForm::of(0, 1)});
    spec.factors.push_back({AffineForm::of(0, 1), AffineForm::of(0).with("k", 1), 2});
    spec.factors.push_back(
        {AffineForm::of(0, 1).with("k", 1), AffineForm::of(0).with("k", 1), 1});
    return spec;
}

BinomialSumSpec g27_spec() {
    BinomialSumSpec spec;
    spec.indices.push_back({"k", AffineForm::of(0), AffineForm::of(0, 1)});
    spec.indices.push_back({"l", AffineForm::of(0), AffineForm::of(0, 1)});
    // C(n,k)^2 C(n,l)^2 C(k+l,n) C(2n-k,n)
    spec.factors.push_back({AffineForm::of(0, 1), AffineForm::of(0).with("k", 1), 2});
    spec.factors.push_back({AffineForm::of(0, 1), AffineForm::of(0).with("l", 1), 2});
    spec.factors.push_back(
        {AffineForm::of(0).with("k", 1).with("l", 1), AffineForm::of(0, 1), 1});
    spec.factors.push_back(
        {AffineForm::of(0, 2).with("k", -1), AffineForm::of(0, 1), 1});
    return spec;
}

LaurentPoly p4_potential() {
    LaurentPoly w(4);
    for (int i = 0; i < 4; ++i) w = w + LaurentPoly::variable(4, i);
    w.add_term({-1, -1, -1, -1}, Rat(1));
    return w;
}

QSeries named_series(const std::string& name, int order) {
    if (name == "quintic-y0") return factorial_ratio_series({5}, {1, 1, 1, 1, 1}, order);
    if (name == "psi5") {
        std::vector<Rat> a(order + 1);
        for (int n = 0; n <= order; ++n)
            a[n] = make_rat(1, int_pow(Int(factorial(n)), 5));
        return QSeries(std::move(a));
    }
    if (name == "apery2") return binomial_sum_series(apery_spec(), order);
    if (name == "g25") {
        std::vector<Rat> central(order + 1);
        for (int n = 0; n <= order; ++n) {
            Int c = binomial(Int(2 * n), Int(n));
            central[n] = Rat(c * c);
        }
        return hadamard_product(QSeries(std::move(central)),
                                binomial_sum_series(apery_spec(), order));
    }
    if (name == "g27") return binomial_sum_series(g27_spec(), order);
    if (name == "guillera-6n") return factorial_ratio_series({6}, {1, 1, 1, 1, 1, 1}, order);
    if (name == "catalan") {
        // shifted Catalan numbers 1, 2, 5, 14, ... via 1 + root of
        // R(t, y) = t^2 y^2 + (2t^2 + 2t - 1) y + (t^2 + 2t)  [phi = 1 + y]
        BiPoly r;
        r.y_coeffs = {RatPoly{Rat(0), Rat(2), Rat(1)}, RatPoly{Rat(-1), Rat(2), Rat(2)},
                      RatPoly{Rat(0), Rat(0), Rat(1)}};
        QSeries y = algebraic_series_solve(r, order);
        return y + QSeries::one(order);
    }
    throw Error("unknown series source: " + name);
}

std::vector<std::string> named_series_names() {
    return {"quintic-y0", "psi5", "apery2", "g25", "g27", "guillera-6n", "catalan"};
}

IntegerSequence named_sequence(const std::string& name) {
    if (name == "quintic-y0")
        return IntegerSequence(name, [](long n) {
            return Rat(factorial(5 * n) / int_pow(factorial(n), 5));
        });
    if (name == "guillera-6n")
        return IntegerSequence(name, [](long n) {
            return Rat(factorial(6 * n) / int_pow(factorial(n), 6));
        });
    if (name == "apery2") {
        return IntegerSequence(name, [](long n) {
            Rat acc(0);
            for (long k = 0; k <= n; ++k) {
                Int b = binomial(Int(n), Int(k));
                acc += Rat(b * b * binomial(Int(n + k), Int(k)));
            }
            return acc;
        });
    }
    if (name == "g27") {
        return IntegerSequence(name, [](long n) {
            Rat acc(0);
            for (long k = 0; k <= n; ++k)
                for (long l = 0; l <= n; ++l) {
                    Int b = binomial(Int(n), Int(k)) * binomial(Int(n), Int(l));
                    Int c = binomial(Int(k + l), Int(n)) * binomial(Int(2 * n - k), Int(n));
                    acc += Rat(b * b * c);
                }
            return acc;
        });
    }
    throw Error("unknown sequence source: " + name);
}

}  // namespace cyops
