// cyops: exact-arithmetic toolkit for fourth-order operators of Calabi-Yau
// type. Subcommands cover the record pipeline (symbol / solve / mirror /
// instantons / gate / transform), series generators (constant-terms /
// diagonal / hadamard), the operator fitter, and the arithmetic checkers
// (dwork / ramanujan). Results of record-based commands are cached as JSON
// under a content-addressed store.
//
// Exit codes: 0 success, 1 gate failure, 2 input error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyops/cache.hpp"
#include "cyops/catalog.hpp"
#include "cyops/exprparse.hpp"
#include "cyops/gate.hpp"
#include "cyops/mirror.hpp"
#include "cyops/opfit.hpp"
#include "cyops/record.hpp"
#include "cyops/riemann.hpp"
#include "cyops/selfdual.hpp"

using namespace cyops;
using nlohmann::json;

namespace {

struct CacheConfig {
    std::string dir = "cyops-cache";
    bool disabled = false;
};

QSeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open series file: " + path);
    std::vector<Rat> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        coeffs.push_back(rat_from_string(line));
    }
    if (coeffs.empty()) throw Error("series file is empty: " + path);
    return QSeries(std::move(coeffs));
}

void print_series(const QSeries& s) {
    for (int n = 0; n <= s.trunc(); ++n) std::cout << rat_to_string(s[n]) << "\n";
}

json series_to_json(const QSeries& s) {
    json a = json::array();
    for (int n = 0; n <= s.trunc(); ++n) a.push_back(rat_to_string(s[n]));
    return a;
}

// Run a record-based command through the cache: `params` must determine the
// output together with the record text and command name. The JSON result
// carries a "text" field holding exactly what should be printed.
int cached_command(const CacheConfig& cache_cfg, const std::string& record_path,
                   const std::string& command, const std::string& params,
                   const std::function<json()>& compute, int (*exit_code)(const json&)) {
    std::ifstream in(record_path);
    if (!in) throw Error("cannot open record file: " + record_path);
    std::stringstream ss;
    ss << in.rdbuf();
    // canonical record text keys the cache, so formatting differences in the
    // input file do not cause misses
    std::string canonical = serialize_record(parse_record(ss.str()));
    CacheKey key{canonical, command, params};
    ResultCache cache(cache_cfg.dir);
    json result;
    if (!cache_cfg.disabled) {
        if (auto hit = cache.lookup(key)) {
            result = json::parse(*hit);
            std::cout << result.value("text", "");
            return exit_code ? exit_code(result) : 0;
        }
    }
    result = compute();
    if (!cache_cfg.disabled) cache.store(key, result.dump());
    std::cout << result.value("text", "");
    return exit_code ? exit_code(result) : 0;
}

ThetaOperator record_operator(const std::string& path) {
    return load_record(path).to_operator().canonical();
}

LaurentPoly parse_expr_shared(const std::string& text, std::vector<std::string>& vars) {
    for (const std::string& v : scan_variables(text))
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    return parse_laurent(text, vars);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Calabi-Yau type differential operators"};
    app.require_subcommand(1);

    CacheConfig cache_cfg;
    app.add_option("--cache-dir", cache_cfg.dir, "result cache directory");
    app.add_flag("--no-cache", cache_cfg.disabled, "skip the result cache");

    // ---- symbol ----
    auto* sym_cmd = app.add_subcommand("symbol", "Riemann symbol of an operator record");
    std::string sym_file;
    sym_cmd->add_option("file", sym_file, "operator record")->required();

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "holomorphic solution at the MUM point");
    std::string solve_file;
    int solve_order = 20;
    solve_cmd->add_option("file", solve_file, "operator record")->required();
    solve_cmd->add_option("--order", solve_order, "truncation order");

    // ---- mirror ----
    auto* mirror_cmd = app.add_subcommand("mirror", "mirror map and Yukawa coupling");
    std::string mirror_file;
    int mirror_order = 20;
    mirror_cmd->add_option("file", mirror_file, "operator record")->required();
    mirror_cmd->add_option("--order", mirror_order, "truncation order");

    // ---- instantons ----
    auto* inst_cmd = app.add_subcommand("instantons", "instanton numbers from the coupling");
    std::string inst_file;
    int inst_depth = 8;
    std::string inst_scale = "1";
    inst_cmd->add_option("file", inst_file, "operator record")->required();
    inst_cmd->add_option("--depth", inst_depth, "largest degree d");
    inst_cmd->add_option("--scale", inst_scale, "scale n0 (rational)");

    // ---- gate ----
    auto* gate_cmd = app.add_subcommand("gate", "run the Calabi-Yau operator gate");
    std::string gate_file;
    int gate_order = 50, gate_depth = 8;
    std::string gate_scale = "1";
    gate_cmd->add_option("file", gate_file, "operator record")->required();
    gate_cmd->add_option("--order", gate_order, "series truncation");
    gate_cmd->add_option("--depth", gate_depth, "instanton depth");
    gate_cmd->add_option("--scale", gate_scale, "instanton scale n0");

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "fit an annihilating operator to a series");
    std::string fit_file, fit_source;
    int fit_max_order = 4, fit_max_degree = 10, fit_margin = 10, fit_order = -1;
    fit_cmd->add_option("series-file", fit_file, "series file, one coefficient per line");
    fit_cmd->add_option("--source", fit_source, "named series source instead of a file");
    fit_cmd->add_option("--max-order", fit_max_order, "order cap");
    fit_cmd->add_option("--max-degree", fit_max_degree, "degree cap");
    fit_cmd->add_option("--margin", fit_margin, "verification margin");
    fit_cmd->add_option("--order", fit_order, "series order for --source (default: minimal)");

    // ---- hadamard ----
    auto* had_cmd = app.add_subcommand("hadamard", "coefficientwise product of two series files");
    std::string had_a, had_b;
    had_cmd->add_option("A", had_a, "first series file")->required();
    had_cmd->add_option("B", had_b, "second series file")->required();

    // ---- constant-terms ----
    auto* ct_cmd = app.add_subcommand("constant-terms", "constant terms of Laurent powers");
    std::string ct_expr;
    int ct_order = 10;
    long ct_cap = 5000000;
    ct_cmd->add_option("--laurent", ct_expr, "Laurent polynomial W")->required();
    ct_cmd->add_option("--order", ct_order, "number of powers");
    ct_cmd->add_option("--term-cap", ct_cap, "support-size cap (exit 3 beyond it)");

    // ---- diagonal ----
    auto* diag_cmd = app.add_subcommand("diagonal", "diagonal of a rational function");
    std::string diag_num, diag_den;
    int diag_order = 8;
    diag_cmd->add_option("--num", diag_num, "numerator polynomial")->required();
    diag_cmd->add_option("--den", diag_den, "denominator polynomial")->required();
    diag_cmd->add_option("--order", diag_order, "diagonal order");

    // ---- dwork ----
    auto* dwork_cmd = app.add_subcommand("dwork", "Dwork congruence check for a named sequence");
    std::string dwork_source;
    long dwork_p = 2;
    int dwork_digits = 3;
    long dwork_bound = -1;
    dwork_cmd->add_option("--source", dwork_source, "named sequence")->required();
    dwork_cmd->add_option("-p,--prime", dwork_p, "prime p")->required();
    dwork_cmd->add_option("--digits", dwork_digits, "digit depth k");
    dwork_cmd->add_option("--bound", dwork_bound, "largest index checked (default p^digits)");

    // ---- transform ----
    auto* tr_cmd = app.add_subcommand("transform", "coordinate transforms of a record");
    std::string tr_file, tr_translate, tr_rescale, tr_shift;
    bool tr_reciprocal = false;
    int tr_pullback = 0;
    tr_cmd->add_option("file", tr_file, "operator record")->required();
    tr_cmd->add_option("--translate", tr_translate, "translate the point p to the origin");
    tr_cmd->add_flag("--reciprocal", tr_reciprocal, "coordinate 1/t");
    tr_cmd->add_option("--pullback", tr_pullback, "power pullback t -> t^k");
    tr_cmd->add_option("--rescale", tr_rescale, "rescale t -> N t");
    tr_cmd->add_option("--shift-exponents", tr_shift, "conjugate by t^mu");

    // ---- ramanujan ----
    auto* ram_cmd = app.add_subcommand("ramanujan", "Ramanujan-type 1/pi^2 partial sum");
    std::string ram_preset = "guillera-6n";
    int ram_terms = 50, ram_digits = 40;
    ram_cmd->add_option("--preset", ram_preset, "preset name (guillera-6n)");
    ram_cmd->add_option("--terms", ram_terms, "number of terms");
    ram_cmd->add_option("--digits", ram_digits, "decimal digits to verify");

    // ---- sources ----
    auto* src_cmd = app.add_subcommand("sources", "list named series sources");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sym_cmd) {
            return cached_command(
                cache_cfg, sym_file, "symbol", "", [&]() {
                    RiemannSymbol sym = riemann_symbol(record_operator(sym_file));
                    json j;
                    j["text"] = sym.to_string();
                    return j;
                },
                nullptr);
        }
        if (*solve_cmd) {
            return cached_command(
                cache_cfg, solve_file, "solve", "order=" + std::to_string(solve_order),
                [&]() {
                    QSeries y0 = holomorphic_solution(record_operator(solve_file), solve_order);
                    std::ostringstream os;
                    for (int n = 0; n <= y0.trunc(); ++n) os << rat_to_string(y0[n]) << "\n";
                    json j;
                    j["coeffs"] = series_to_json(y0);
                    j["text"] = os.str();
                    return j;
                },
                nullptr);
        }
        if (*mirror_cmd) {
            return cached_command(
                cache_cfg, mirror_file, "mirror", "order=" + std::to_string(mirror_order),
                [&]() {
                    ThetaOperator op = record_operator(mirror_file);
                    FrobeniusBasis fb = frobenius_basis(op, mirror_order);
                    MirrorData md = compute_mirror(fb);
                    std::ostringstream os;
                    os << "q(t):\n";
                    for (int n = 0; n <= md.q_of_t.trunc(); ++n)
                        os << rat_to_string(md.q_of_t[n]) << "\n";
                    os << "t(q):\n";
                    for (int n = 0; n <= md.t_of_q.trunc(); ++n)
                        os << rat_to_string(md.t_of_q[n]) << "\n";
                    if (fb.n == 4) {
                        os << "K(q):\n";
                        for (int n = 0; n <= md.K.trunc(); ++n)
                            os << rat_to_string(md.K[n]) << "\n";
                    }
                    json j;
                    j["q"] = series_to_json(md.q_of_t);
                    j["t"] = series_to_json(md.t_of_q);
                    if (fb.n == 4) j["K"] = series_to_json(md.K);
                    j["text"] = os.str();
                    return j;
                },
                nullptr);
        }
        if (*inst_cmd) {
            Rat scale = rat_from_string(inst_scale);
            return cached_command(
                cache_cfg, inst_file, "instantons",
                "depth=" + std::to_string(inst_depth) + ";scale=" + rat_to_string(scale),
                [&]() {
                    ThetaOperator op = record_operator(inst_file);
                    FrobeniusBasis fb = frobenius_basis(op, 2 * inst_depth + 4);
                    MirrorData md = compute_mirror(fb);
                    InstantonTable table = instanton_numbers(md.K, inst_depth, scale);
                    std::ostringstream os;
                    json vals = json::object();
                    for (const auto& [d, nd] : table.entries) {
                        os << "n_" << d << " = " << rat_to_string(nd) << "\n";
                        vals[std::to_string(d)] = rat_to_string(nd);
                    }
                    json j;
                    j["values"] = vals;
                    j["text"] = os.str();
                    return j;
                },
                nullptr);
        }
        if (*gate_cmd) {
            Rat scale = rat_from_string(gate_scale);
            return cached_command(
                cache_cfg, gate_file, "gate",
                "order=" + std::to_string(gate_order) + ";depth=" + std::to_string(gate_depth) +
                    ";scale=" + rat_to_string(scale),
                [&]() {
                    GateOptions opt;
                    opt.truncation = gate_order;
                    opt.depth = gate_depth;
                    opt.scale = scale;
                    GateReport rep = run_gate(record_operator(gate_file), opt);
                    json j = json::parse(rep.to_json());
                    j["text"] = rep.to_text();
                    return j;
                },
                [](const json& j) {
                    return j.value("verdict", "") == "Fails" ? 1 : 0;
                });
        }
        if (*fit_cmd) {
            QSeries s = [&]() {
                if (!fit_source.empty()) {
                    long minimal = static_cast<long>(fit_max_order + 1) * (fit_max_degree + 1) +
                                   fit_margin + fit_max_degree;
                    return named_series(fit_source, fit_order > 0 ? fit_order
                                                                  : static_cast<int>(minimal) + 2);
                }
                if (fit_file.empty()) throw Error("fit needs a series file or --source");
                return read_series_file(fit_file);
            }();
            FitOptions opt{fit_max_order, fit_max_degree, fit_margin};
            auto op = fit_operator(s, opt);
            if (!op) {
                std::cout << "no operator found within caps (order <= " << fit_max_order
                          << ", degree <= " << fit_max_degree << ")\n";
                return 2;
            }
            OperatorRecord rec = OperatorRecord::from_operator(
                *op, fit_source.empty() ? "fitted" : fit_source);
            rec.metadata.emplace_back("fitted-from", fit_source.empty() ? fit_file : fit_source);
            rec.metadata.emplace_back("margin", std::to_string(fit_margin));
            std::cout << serialize_record(rec);
            return 0;
        }
        if (*had_cmd) {
            print_series(hadamard_product(read_series_file(had_a), read_series_file(had_b)));
            return 0;
        }
        if (*ct_cmd) {
            std::vector<std::string> vars;
            LaurentPoly w = parse_expr_shared(ct_expr, vars);
            print_series(constant_term_series(w, ct_order, static_cast<size_t>(ct_cap)));
            return 0;
        }
        if (*diag_cmd) {
            std::vector<std::string> vars;
            for (const std::string& v : scan_variables(diag_num)) vars.push_back(v);
            for (const std::string& v : scan_variables(diag_den))
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
            if (vars.empty()) throw Error("diagonal: no variables in the expressions");
            LaurentPoly num = parse_laurent(diag_num, vars);
            LaurentPoly den = parse_laurent(diag_den, vars);
            print_series(diagonal_of_rational(num, den, diag_order));
            return 0;
        }
        if (*dwork_cmd) {
            IntegerSequence seq = named_sequence(dwork_source);
            long bound = dwork_bound;
            if (bound < 0) {
                bound = 1;
                for (int i = 0; i < dwork_digits; ++i) bound *= dwork_p;
            }
            DworkReport rep = dwork_check(seq, dwork_p, dwork_digits, bound);
            if (rep.ok) {
                std::cout << "dwork congruence holds for " << dwork_source << " at p = "
                          << dwork_p << " up to " << bound << "\n";
                return 0;
            }
            std::cout << "dwork congruence FAILS for " << dwork_source << " at p = " << dwork_p
                      << ", first counterexample n = " << rep.first_failure << "\n";
            return 1;
        }
        if (*tr_cmd) {
            OperatorRecord rec = load_record(tr_file);
            ThetaOperator op = rec.to_operator().canonical();
            std::string suffix;
            if (!tr_translate.empty()) {
                op = translate_point(op, rat_from_string(tr_translate));
                suffix = "-translated";
            } else if (tr_reciprocal) {
                op = reciprocal_transform(op);
                suffix = "-reciprocal";
            } else if (tr_pullback > 0) {
                op = power_pullback(op, tr_pullback);
                suffix = "-pullback";
            } else if (!tr_rescale.empty()) {
                op = rescale_coordinate(op, rat_from_string(tr_rescale));
                suffix = "-rescaled";
            } else if (!tr_shift.empty()) {
                op = shift_exponents(op, rat_from_string(tr_shift));
                suffix = "-shifted";
            } else {
                throw Error("transform: choose one of --translate/--reciprocal/--pullback/"
                            "--rescale/--shift-exponents");
            }
            OperatorRecord out = OperatorRecord::from_operator(op, rec.id + suffix);
            std::cout << serialize_record(out);
            return 0;
        }
        if (*ram_cmd) {
            if (ram_preset != "guillera-6n") throw Error("unknown preset: " + ram_preset);
            IntegerSequence A = named_sequence("guillera-6n");
            Rat s = ramanujan_partial_sum(A, Rat(36), Rat(504), Rat(2128),
                                          make_rat(1, 1000000), ram_terms);
            bool ok = agrees_with_over_pi_squared(s, Rat(375), ram_digits);
            std::cout << "partial sum (" << ram_terms << " terms) = " << rat_to_string(s) << "\n";
            std::cout << "agrees with 375/pi^2 to " << ram_digits << " digits: "
                      << (ok ? "yes" : "no") << "\n";
            return ok ? 0 : 1;
        }
        if (*src_cmd) {
            std::cout << "series sources:\n";
            for (const auto& n : named_series_names()) std::cout << "  " << n << "\n";
            std::cout << "bundled operator records (data/):\n";
            for (const auto& n : corpus_operator_names()) std::cout << "  " << n << ".op\n";
            return 0;
        }
    } catch (const ResourceCap& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
