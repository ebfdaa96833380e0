#pragma once

// Bundled corpus: the operators and series the test and acceptance suites
// exercise, built in exact arithmetic. The same operators ship as record
// files under data/; the two constructions cross-check each other.

#include <string>
#include <vector>

#include "cyops/qseries.hpp"
#include "cyops/sources.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

// Known names: quintic, aesz15, aesz22, aesz25, aesz245, bogner, euler,
// legendre, theta5-t.
ThetaOperator corpus_operator(const std::string& name);
std::vector<std::string> corpus_operator_names();

// Named series sources for the CLI and the fitter. Known names:
//   quintic-y0    (5n)!/(n!)^5
//   psi5          1/(n!)^5
//   apery2        Apery numbers  sum C(n,k)^2 C(n+k,k)
//   g25           C(2n,n)^2 * Apery  (AESZ 25 solution)
//   g27           sum_{k,l} C(n,k)^2 C(n,l)^2 C(k+l,n) C(2n-k,n)
//   guillera-6n   (6n)!/(n!)^6
//   catalan       1, 2, 5, 14, ... (shifted Catalan)
QSeries named_series(const std::string& name, int order);
std::vector<std::string> named_series_names();

// The same sources as memoized integer sequences (for dwork/ramanujan).
IntegerSequence named_sequence(const std::string& name);

BinomialSumSpec apery_spec();
BinomialSumSpec g27_spec();

// Landau-Ginzburg potential of P^4: X1+X2+X3+X4+1/(X1 X2 X3 X4).
LaurentPoly p4_potential();

}  // namespace cyops
