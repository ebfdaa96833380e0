#include "cyops/gate.hpp"

#include <sstream>

#include "json.hpp"

namespace cyops {

namespace {

bool strict(const StageIntegrality& s) {
    return s.ran && s.error.empty() && s.report.integral && s.report.c == 1 &&
           s.report.n_scale == 1;
}

bool relaxed(const StageIntegrality& s) {
    return s.ran && s.error.empty() && s.report.integral;
}

}  // namespace

GateReport run_gate(const ThetaOperator& op, const GateOptions& opt) {
    GateReport rep;
    rep.truncation = opt.truncation;
    rep.depth = opt.depth;
    rep.scale = opt.scale;
    rep.order = op.order();
    rep.degree = op.degree();

    try {
        FuchsReport fr = fuchs_check(op);
        rep.fuchsian = fr.fuchsian;
        rep.fuchs_failures = fr.failures;
    } catch (const Error& e) {
        rep.fuchsian = false;
        rep.failure_list.push_back(std::string("fuchsian stage error: ") + e.what());
    }

    try {
        RatFun q = q_quantity(op);
        rep.self_dual = q.is_zero();
        AlphaFunction a = alpha_dual_function(op);
        rep.alpha_rational = a.rational;
        rep.alpha_parity_ok = a.parity_ok;
    } catch (const Error& e) {
        rep.self_dual = false;
        rep.self_dual_error = e.what();
    }

    rep.mum_at_0 = mum_check(op);

    if (rep.mum_at_0) {
        FrobeniusBasis fb;
        MirrorData md;
        bool pipeline_ok = false;
        try {
            fb = frobenius_basis(op, opt.truncation);
            rep.y0.ran = true;
            rep.y0.report = n_integrality_scan(fb.part(0));
            md = compute_mirror(fb);
            rep.q_coordinate.ran = true;
            rep.q_coordinate.report = n_integrality_scan(md.q_of_t);
            pipeline_ok = fb.n == 4;
        } catch (const Error& e) {
            if (!rep.y0.ran)
                rep.y0.error = e.what();
            else
                rep.q_coordinate.error = e.what();
        }
        if (pipeline_ok) {
            try {
                rep.yukawa.ran = true;
                rep.yukawa.report = n_integrality_scan(md.K);
            } catch (const Error& e) {
                rep.yukawa.error = e.what();
            }
            try {
                rep.instantons.ran = true;
                InstantonTable table =
                    instanton_numbers(md.K, std::min(opt.depth, md.K.trunc()), opt.scale);
                rep.instantons.values = table.entries;
                rep.instantons.integral = true;
                for (const auto& [d, nd] : table.entries) {
                    if (!is_integer(nd)) {
                        rep.instantons.integral = false;
                        rep.instantons.first_noninteger_d = d;
                        rep.instantons.denominator = den(nd);
                        break;
                    }
                }
            } catch (const Error& e) {
                rep.instantons.error = e.what();
            }
        }
    }

    try {
        rep.symbol = riemann_symbol(op);
    } catch (const Error&) {
        // symbol is advisory in the report; Fuchs failures already recorded
    }

    // verdict
    if (!rep.fuchsian) rep.failure_list.push_back("fuchsian");
    if (!rep.self_dual) rep.failure_list.push_back("self_dual");
    if (!rep.mum_at_0) rep.failure_list.push_back("mum_at_0");
    if (!relaxed(rep.y0)) rep.failure_list.push_back("y0_integrality");
    if (!relaxed(rep.q_coordinate)) rep.failure_list.push_back("q_integrality");
    if (!relaxed(rep.yukawa)) rep.failure_list.push_back("K_integrality");
    if (!(rep.instantons.ran && rep.instantons.error.empty() && rep.instantons.integral))
        rep.failure_list.push_back("instanton_integrality");

    if (!rep.failure_list.empty()) {
        rep.verdict = GateVerdict::Fails;
    } else if (strict(rep.y0) && strict(rep.q_coordinate) && strict(rep.yukawa)) {
        rep.verdict = GateVerdict::CalabiYau;
    } else {
        rep.verdict = GateVerdict::CalabiYauNIntegral;
    }
    return rep;
}

namespace {

std::string verdict_name(GateVerdict v) {
    switch (v) {
        case GateVerdict::CalabiYau: return "CalabiYau";
        case GateVerdict::CalabiYauNIntegral: return "CalabiYau-N-integral";
        case GateVerdict::Fails: return "Fails";
    }
    return "?";
}

std::string stage_text(const char* name, const StageIntegrality& s) {
    std::ostringstream os;
    os << "  " << name << ": ";
    if (!s.ran)
        os << "not run";
    else if (!s.error.empty())
        os << "error: " << s.error;
    else if (s.report.integral)
        os << "N-integral with (c, N) = (" << s.report.c.get_str() << ", "
           << s.report.n_scale.get_str() << ")";
    else
        os << "fails";
    os << "\n";
    return os.str();
}

}  // namespace

std::string GateReport::to_text() const {
    std::ostringstream os;
    os << "gate report (order " << order << ", degree " << degree << "; to order " << truncation
       << ", instanton depth " << depth << ", scale " << rat_to_string(scale) << ")\n";
    os << "  fuchsian: " << (fuchsian ? "yes" : "no") << "\n";
    os << "  self-dual (Q == 0): " << (self_dual ? "yes" : "no");
    if (!self_dual_error.empty()) os << " (" << self_dual_error << ")";
    os << "; alpha rational: " << (alpha_rational ? "yes" : "no")
       << ", exponent parity: " << (alpha_parity_ok ? "even" : "odd witness") << "\n";
    os << "  MUM at 0: " << (mum_at_0 ? "yes" : "no") << "\n";
    os << stage_text("y0", y0) << stage_text("q(t)", q_coordinate) << stage_text("K(q)", yukawa);
    os << "  instantons: ";
    if (!instantons.ran)
        os << "not run";
    else if (!instantons.error.empty())
        os << "error: " << instantons.error;
    else if (instantons.integral)
        os << "integral to depth " << depth;
    else
        os << "non-integral at d = " << instantons.first_noninteger_d << " (denominator "
           << instantons.denominator.get_str() << ")";
    os << "\n";
    for (const auto& [d, nd] : instantons.values)
        os << "    n_" << d << " = " << rat_to_string(nd) << "\n";
    if (symbol) os << "  riemann symbol:\n" << symbol->to_string();
    os << "  verdict: " << verdict_name(verdict);
    if (!failure_list.empty()) {
        os << " [";
        for (size_t i = 0; i < failure_list.size(); ++i)
            os << (i ? ", " : "") << failure_list[i];
        os << "]";
    }
    os << "\n";
    return os.str();
}

std::string GateReport::to_json() const {
    nlohmann::json j;
    j["truncation"] = truncation;
    j["depth"] = depth;
    j["scale"] = rat_to_string(scale);
    j["order"] = order;
    j["degree"] = degree;
    j["fuchsian"] = fuchsian;
    j["self_dual"] = self_dual;
    j["alpha_rational"] = alpha_rational;
    j["alpha_parity_ok"] = alpha_parity_ok;
    j["mum_at_0"] = mum_at_0;
    auto stage = [](const StageIntegrality& s) {
        nlohmann::json js;
        js["ran"] = s.ran;
        js["error"] = s.error;
        js["integral"] = s.report.integral;
        js["c"] = s.report.c.get_str();
        js["N"] = s.report.n_scale.get_str();
        return js;
    };
    j["y0"] = stage(y0);
    j["q"] = stage(q_coordinate);
    j["K"] = stage(yukawa);
    nlohmann::json inst;
    inst["ran"] = instantons.ran;
    inst["error"] = instantons.error;
    inst["integral"] = instantons.integral;
    inst["first_noninteger_d"] = instantons.first_noninteger_d;
    inst["denominator"] = instantons.denominator.get_str();
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [d, nd] : instantons.values) values[std::to_string(d)] = rat_to_string(nd);
    inst["values"] = values;
    j["instantons"] = inst;
    j["verdict"] = verdict_name(verdict);
    j["failures"] = failure_list;
    return j.dump(2);
}

}  // namespace cyops
