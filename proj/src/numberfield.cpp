#include "cyops/numberfield.hpp"

#include <algorithm>

namespace cyops {

NumberField::NumberField(RatPoly minpoly) : minpoly_(std::move(minpoly)) {
    if (minpoly_.degree() < 2) throw Error("NumberField: minpoly degree must be >= 2");
    if (minpoly_.degree() > 4) throw DegreeCapExceeded("NumberField: minpoly degree > 4");
    if (minpoly_.leading() != 1) minpoly_ = minpoly_.monic();
}

NFElem::NFElem(std::shared_ptr<const NumberField> field, RatPoly rep)
    : field_(std::move(field)), rep_(std::move(rep)) {
    if (rep_.degree() >= field_->degree()) rep_ = rep_.remainder(field_->minpoly());
}

NFElem::NFElem(std::shared_ptr<const NumberField> field, const Rat& v)
    : field_(std::move(field)), rep_(RatPoly::constant(v)) {}

NFElem NFElem::generator(const std::shared_ptr<const NumberField>& field) {
    return NFElem(field, RatPoly::variable());
}

Rat NFElem::rational_value() const {
    if (!is_rational()) throw Error("NFElem: not rational");
    return rep_.coeff(0);
}

namespace {
void check_fields(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field()) throw Error("NFElem: mixed fields");
}
}  // namespace

NFElem NFElem::inverse() const {
    if (is_zero()) throw Error("NFElem: inverse of zero");
    // extended Euclid: u*rep + v*minpoly = gcd (a unit, since minpoly is
    // irreducible and rep is a nonzero residue)
    RatPoly r0 = field_->minpoly(), r1 = rep_;
    RatPoly s0, s1 = RatPoly::constant(Rat(1));  // coefficients of rep
    while (!r1.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(r0, r1, q, r);
        RatPoly s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if (r0.degree() != 0)
        throw Error("NFElem: minpoly not irreducible (gcd found)");
    return NFElem(field_, (1 / r0.coeff(0)) * s0);
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    check_fields(a, b);
    return NFElem(a.field_, a.rep_ + b.rep_);
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    check_fields(a, b);
    return NFElem(a.field_, a.rep_ - b.rep_);
}

NFElem operator-(const NFElem& a) { return NFElem(a.field_, -a.rep_); }

NFElem operator*(const NFElem& a, const NFElem& b) {
    check_fields(a, b);
    return NFElem(a.field_, a.rep_ * b.rep_);
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

NFElem operator*(const Rat& s, const NFElem& a) { return NFElem(a.field_, s * a.rep_); }

bool operator==(const NFElem& a, const NFElem& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
}

NFDivision divide_by_linear(const RatPoly& p, const NFElem& alpha) {
    std::vector<NFElem> coeffs;
    for (int k = 0; k <= p.degree(); ++k) coeffs.emplace_back(alpha.field(), p.coeff(k));
    return divide_by_linear(coeffs, alpha);
}

NFDivision divide_by_linear(const std::vector<NFElem>& p, const NFElem& alpha) {
    NFDivision out;
    NFElem acc(alpha.field(), Rat(0));
    // Horner: remainder p(alpha), quotient coefficients collected on the way.
    for (size_t k = p.size(); k-- > 0;) {
        acc = acc * alpha + p[k];
        if (k > 0) out.quotient.push_back(acc);
    }
    out.remainder = acc;
    std::reverse(out.quotient.begin(), out.quotient.end());
    return out;
}

}  // namespace cyops
