#pragma once

// Exact arithmetic in Q[x]/(f) for monic irreducible f of degree <= 4; just
// enough to read indicial data at algebraic singular loci. Elements are
// residue polynomials of degree < deg f.

#include <memory>

#include "cyops/ratpoly.hpp"

namespace cyops {

class NumberField {
public:
    explicit NumberField(RatPoly minpoly);

    const RatPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }

private:
    RatPoly minpoly_;  // monic, degree 2..4
};

class NFElem {
public:
    NFElem() = default;  // zero in an unspecified field; usable once assigned
    NFElem(std::shared_ptr<const NumberField> field, RatPoly rep);
    NFElem(std::shared_ptr<const NumberField> field, const Rat& v);

    static NFElem generator(const std::shared_ptr<const NumberField>& field);

    const RatPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rat rational_value() const;

    NFElem inverse() const;  // extended Euclid; throws on zero

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const Rat& s, const NFElem& a);
    friend bool operator==(const NFElem& a, const NFElem& b);

    const std::shared_ptr<const NumberField>& field() const { return field_; }

private:
    std::shared_ptr<const NumberField> field_;
    RatPoly rep_;
};

// Synthetic division of p in Q[t] by (t - alpha) over the field: returns the
// quotient coefficients (in K) and the remainder p(alpha).
struct NFDivision {
    std::vector<NFElem> quotient;
    NFElem remainder;
};
NFDivision divide_by_linear(const RatPoly& p, const NFElem& alpha);
NFDivision divide_by_linear(const std::vector<NFElem>& p, const NFElem& alpha);

}  // namespace cyops
