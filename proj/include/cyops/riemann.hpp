#pragma once

// Singular-point analysis: the Fuchs criterion, local exponents (indicial
// roots) at rational points, algebraic loci and infinity, and the Riemann
// symbol assembled from them.

#include <optional>
#include <string>
#include <vector>

#include "cyops/numberfield.hpp"
#include "cyops/polyfactor.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

struct PointDescriptor {
    enum class Kind { Rational, Algebraic, Infinity };
    Kind kind = Kind::Rational;
    Rat value;        // Rational
    RatPoly minpoly;  // Algebraic: monic irreducible over Q, degree >= 2

    static PointDescriptor rational(const Rat& v);
    static PointDescriptor algebraic(const RatPoly& minpoly);
    static PointDescriptor infinity();

    int locus_degree() const { return kind == Kind::Algebraic ? minpoly.degree() : 1; }
    std::string to_string() const;
    friend bool operator==(const PointDescriptor& a, const PointDescriptor& b);
};

// One exponent with multiplicity: an exact rational, or an algebraic number
// described by its monic irreducible minimal polynomial over Q.
struct ExponentEntry {
    bool rational = true;
    Rat value;
    RatPoly minpoly;  // when !rational
    int multiplicity = 1;
    std::string to_string() const;
};

struct SymbolColumn {
    PointDescriptor point;
    std::vector<ExponentEntry> exponents;  // multiplicities sum to the order
    Rat exponent_sum;                      // exact, from the indicial coefficients
    bool candidate_apparent = false;       // integer exponents at a leading-coefficient root
};

struct RiemannSymbol {
    int order = 0;
    std::vector<SymbolColumn> columns;
    std::string to_string() const;
};

struct FuchsViolation {
    PointDescriptor point;
    int index;  // the i of ord(a_i/a_n) <= n-i that fails
};

struct FuchsReport {
    bool fuchsian = true;
    std::vector<FuchsViolation> failures;
};

FuchsReport fuchs_check(const DiffOperator& op);
FuchsReport fuchs_check(const ThetaOperator& op);

// Indicial roots at p, with multiplicity; IrregularPoint when the indicial
// degree drops below the order, DegreeCapExceeded for algebraic loci with
// minpoly degree > 4.
std::vector<ExponentEntry> local_exponents(const ThetaOperator& op, const PointDescriptor& p);

// Sum of the indicial roots (exact; defined also when roots are algebraic).
Rat local_exponent_sum(const ThetaOperator& op, const PointDescriptor& p);

RiemannSymbol riemann_symbol(const ThetaOperator& op);

// True if 0 is an ordinary point (unit leading coefficient in the reduced
// d/dt-form).
bool ordinary_at_zero(const ThetaOperator& op);

}  // namespace cyops
