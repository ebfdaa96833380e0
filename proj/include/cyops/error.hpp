#pragma once

#include <stdexcept>
#include <string>

namespace cyops {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CYOPS_ERROR_KIND(Name)                                            \
    struct Name : Error {                                                 \
        explicit Name(const std::string& what = #Name) : Error(what) {}   \
    }

CYOPS_ERROR_KIND(DivisionByZeroConstantTerm);
CYOPS_ERROR_KIND(BadConstantTerm);
CYOPS_ERROR_KIND(NotInvertible);
CYOPS_ERROR_KIND(InsufficientTruncation);
CYOPS_ERROR_KIND(ZeroConstantDenominator);
CYOPS_ERROR_KIND(NotMUM);
CYOPS_ERROR_KIND(ResonanceBreakdown);
CYOPS_ERROR_KIND(WrongOrder);
CYOPS_ERROR_KIND(NotOrderFour);
CYOPS_ERROR_KIND(NonFuchsian);
CYOPS_ERROR_KIND(IrregularPoint);
CYOPS_ERROR_KIND(NonSimplePole);
CYOPS_ERROR_KIND(DegreeCapExceeded);
CYOPS_ERROR_KIND(FactorizationIncomplete);
CYOPS_ERROR_KIND(UnboundedRegion);
CYOPS_ERROR_KIND(SingularBranch);
CYOPS_ERROR_KIND(NonIntegralSequence);
CYOPS_ERROR_KIND(NonPositiveDegree);
CYOPS_ERROR_KIND(AmbiguousKernel);
CYOPS_ERROR_KIND(ArityError);
CYOPS_ERROR_KIND(ResourceCap);

#undef CYOPS_ERROR_KIND

// Parse failures carry a source position and what was expected there.
struct ParseError : Error {
    int line;
    int column;
    std::string expected;
    ParseError(int line_, int col_, const std::string& expected_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": expected " + expected_),
          line(line_), column(col_), expected(expected_) {}
};

}  // namespace cyops
