#pragma once

// The Calabi-Yau operator gate: Fuchsian, self-dual, MUM at 0, and the
// integrality battery (holomorphic solution, mirror map, Yukawa coupling,
// instanton numbers), aggregated into a structured verdict. Every answer is
// labeled by the inspected truncation: the gate corroborates or falsifies,
// it never proves.

#include <optional>
#include <string>

#include "cyops/integrality.hpp"
#include "cyops/mirror.hpp"
#include "cyops/riemann.hpp"
#include "cyops/selfdual.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

enum class GateVerdict { CalabiYau, CalabiYauNIntegral, Fails };

struct StageIntegrality {
    bool ran = false;
    std::string error;  // stage exception, if any
    IntegralityReport report;
};

struct InstantonIntegrality {
    bool ran = false;
    std::string error;
    bool integral = false;
    long first_noninteger_d = -1;
    Int denominator = 1;
    std::vector<std::pair<long, Rat>> values;
};

struct GateReport {
    int truncation = 0;
    int depth = 0;
    Rat scale = Rat(1);

    bool fuchsian = false;
    std::vector<FuchsViolation> fuchs_failures;

    bool self_dual = false;  // Q == 0
    std::string self_dual_error;
    bool alpha_rational = false;
    bool alpha_parity_ok = false;

    bool mum_at_0 = false;

    StageIntegrality y0, q_coordinate, yukawa;
    InstantonIntegrality instantons;

    std::optional<RiemannSymbol> symbol;
    int order = 0;
    int degree = 0;

    GateVerdict verdict = GateVerdict::Fails;
    std::vector<std::string> failure_list;

    std::string to_text() const;
    std::string to_json() const;
};

struct GateOptions {
    int truncation = 50;
    int depth = 8;
    Rat scale = Rat(1);
};

GateReport run_gate(const ThetaOperator& op, const GateOptions& opt = {});

}  // namespace cyops
