/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include <clocale>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accelrad/closedform.hpp"
#include "accelrad/equivalence.hpp"
#include "accelrad/oracle.hpp"
#include "accelrad/sweep.hpp"
#include "accelrad/verify.hpp"

namespace {

using namespace accelrad;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

// flat "key = value" run manifests; '#' starts a comment
std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NonPositiveInput("config file not readable: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty() && !value.empty()) out[key] = value;
    }
    return out;
}

struct CliOptions {
    std::string config_path;
    std::string preset;
    std::string case_name = "atom";
    std::string method_name = "exact";
    std::string variable = "omega";
    std::string scale = "log";
    std::string output;
    double a = 0.0, nu = 0.0, omega = 0.0, z0 = 0.0, g = 0.0, c = kSpeedOfLightSI;
    double from = 0.0, to = 0.0;
    int points = 0;
    int jobs = 0;
};

void add_param_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--a", o.a, "acceleration a (m/s^2)");
    cmd->add_option("--nu", o.nu, "photon angular frequency nu (rad/s)");
    cmd->add_option("--omega", o.omega, "atomic angular frequency omega (rad/s)");
    cmd->add_option("--z0", o.z0, "fixed position z0 (m)");
    cmd->add_option("--g", o.g, "effective coupling g_eff (rad/s)");
    cmd->add_option("--c", o.c, "speed of light (m/s), default exact SI");
    cmd->add_option("--config", o.config_path, "flat key = value run manifest");
}

double to_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw NonPositiveInput("config: cannot parse '" + s + "' for key " + key);
    }
}

// precedence: defaults < preset < config file < explicit flags
void apply_config(const std::map<std::string, std::string>& cfg, CLI::App* cmd,
                  CliOptions& o) {
    auto absent = [&](const char* flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    for (const auto& [key, value] : cfg) {
        if (key == "a" && absent("--a")) o.a = to_double(value, key);
        else if (key == "nu" && absent("--nu")) o.nu = to_double(value, key);
        else if (key == "omega" && absent("--omega")) o.omega = to_double(value, key);
        else if (key == "z0" && absent("--z0")) o.z0 = to_double(value, key);
        else if (key == "g" && absent("--g")) o.g = to_double(value, key);
        else if (key == "c" && absent("--c")) o.c = to_double(value, key);
        else if (key == "case" && absent("--case")) o.case_name = value;
        else if (key == "method" && absent("--method")) o.method_name = value;
        else if (key == "variable" && absent("--var")) o.variable = value;
        else if (key == "scale" && absent("--scale")) o.scale = value;
        else if (key == "from" && absent("--from")) o.from = to_double(value, key);
        else if (key == "to" && absent("--to")) o.to = to_double(value, key);
        else if (key == "points" && absent("--points")) o.points = int(to_double(value, key));
        else if (key == "output" && absent("--output")) o.output = value;
        else if (key == "jobs" && absent("--jobs")) o.jobs = int(to_double(value, key));
        else if (key == "preset" && absent("--preset")) o.preset = value;
    }
}

PhysicalParams params_from(const CliOptions& o) {
    PhysicalParams p;
    p.a = o.a;
    p.nu = o.nu;
    p.omega = o.omega;
    p.z0 = o.z0;
    p.g = o.g;
    p.c = o.c;
    return p;
}

void print_result(const std::string& case_name, const std::string& method,
                  const closedform::ProbabilityResult& r) {
    std::cout << "case=" << case_name << '\n';
    std::cout << "method=" << method << '\n';
    std::cout << "value=" << fmt17(r.value) << '\n';
    std::cout << "log10_value=" << fmt17(r.log10_value) << '\n';
    std::cout << "theta=" << fmt17(r.angles.theta) << '\n';
    std::cout << "theta_prime=" << fmt17(r.angles.theta_prime) << '\n';
    std::cout << "theta_bar=" << fmt17(r.angles.theta_bar) << '\n';
    std::cout << "theta_dprime=" << fmt17(r.angles.theta_dprime) << '\n';
    std::cout << "planck_factor=" << fmt17(r.planck_factor) << '\n';
    std::cout << "warnings=";
    for (std::size_t i = 0; i < r.warnings.size(); ++i) {
        if (i) std::cout << ';';
        std::cout << r.warnings[i];
    }
    std::cout << '\n';
}

int cmd_eval(CLI::App* cmd, CliOptions& o) {
    if (!o.config_path.empty()) apply_config(load_config(o.config_path), cmd, o);
    const PhysicalParams p = params_from(o);
    const auto cs = sweep::parse_case(o.case_name);
    const auto ms = sweep::parse_method(o.method_name);
    if (!cs || !ms) throw NonPositiveInput("unknown case/method");
    closedform::ProbabilityResult r;
    if (*cs == sweep::Case::atom) {
        r = (*ms == sweep::MethodSel::oracle) ? oracle::p_exc_atom_oracle(p)
                                              : closedform::p_exc_atom(p);
    } else {
        switch (*ms) {
            case sweep::MethodSel::exact: r = closedform::p_exc_mirror_exact(p); break;
            case sweep::MethodSel::taylor: r = closedform::p_exc_mirror_taylor(p); break;
            case sweep::MethodSel::small_beta:
                r = closedform::p_exc_mirror_small_beta(p);
                break;
            case sweep::MethodSel::oracle: r = oracle::p_exc_mirror_oracle(p); break;
        }
    }
    print_result(o.case_name, o.method_name, r);
    return kExitOk;
}

int cmd_sweep(CLI::App* cmd, CliOptions& o) {
    sweep::RunConfig cfg;
    if (!o.preset.empty()) {
        auto pre = sweep::preset(o.preset);
        if (!pre) throw NonPositiveInput("unknown preset: " + o.preset);
        cfg = *pre;
    }
    if (!o.config_path.empty()) apply_config(load_config(o.config_path), cmd, o);
    auto provided = [&](const char* flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    // overlay explicit/config values onto the preset
    if (!cfg.sweep) cfg.sweep = sweep::SweepSpec{};
    sweep::SweepSpec& spec = *cfg.sweep;
    const bool had_preset = !o.preset.empty();
    if (provided("--a") || !had_preset) cfg.params.a = o.a;
    if (provided("--nu") || (!had_preset && o.nu != 0.0)) cfg.params.nu = o.nu;
    if (provided("--omega") || (!had_preset && o.omega != 0.0)) cfg.params.omega = o.omega;
    if (provided("--z0") || !had_preset) cfg.params.z0 = o.z0;
    if (provided("--g") || !had_preset) cfg.params.g = o.g;
    if (provided("--c") || !had_preset) cfg.params.c = o.c;
    if (provided("--var") || !had_preset) {
        const auto v = sweep::parse_variable(o.variable);
        if (!v) throw NonPositiveInput("unknown sweep variable: " + o.variable);
        spec.variable = *v;
    }
    if (provided("--case") || !had_preset) {
        const auto cs = sweep::parse_case(o.case_name);
        if (!cs) throw NonPositiveInput("unknown case: " + o.case_name);
        spec.case_ = *cs;
    }
    if (provided("--method") || !had_preset) {
        const auto ms = sweep::parse_method(o.method_name);
        if (!ms) throw NonPositiveInput("unknown method: " + o.method_name);
        spec.method = *ms;
    }
    if (provided("--scale") || !had_preset) {
        const auto sc = sweep::parse_scale(o.scale);
        if (!sc) throw NonPositiveInput("unknown scale: " + o.scale);
        spec.scale = *sc;
    }
    if (provided("--from") || !had_preset) spec.from = o.from;
    if (provided("--to") || !had_preset) spec.to = o.to;
    if (o.points > 0 && (provided("--points") || !had_preset)) spec.points = o.points;
    cfg.jobs = o.jobs;
    cfg.output_path = o.output;

    const auto rows = sweep::run_sweep(cfg);
    bool all_failed = true;
    bool all_input_errors = true;
    for (const auto& row : rows) {
        if (row.result) all_failed = false;
        if (!row.input_error) all_input_errors = false;
    }
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        sweep::write_csv(std::cout, spec, rows);
    } else {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw NonPositiveInput("cannot open output: " + cfg.output_path);
        sweep::write_csv(out, spec, rows);
    }
    if (!all_failed) return kExitOk;
    return all_input_errors ? kExitInputError : kExitNoConvergence;
}

verify::Tolerances parse_tols(const std::vector<std::string>& raw) {
    verify::Tolerances out;
    for (const auto& s : raw) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw NonPositiveInput("--tol expects name=value, got " + s);
        out[s.substr(0, eq)] = to_double(s.substr(eq + 1), s);
    }
    return out;
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& tols) {
    const verify::Tolerances tol = parse_tols(tols);
    std::vector<verify::CheckResult> checks;
    if (suite == "special") checks = verify::verify_special(tol);
    else if (suite == "integrals") checks = verify::verify_integrals(tol);
    else if (suite == "figures") checks = verify::verify_figures(tol);
    else if (suite == "equivalence") checks = verify::verify_equivalence(tol);
    else throw NonPositiveInput("unknown suite: " + suite);

    int passed = 0;
    for (const auto& c : checks) {
        std::printf("[%s] %-34s measured=%.3e threshold=%.3e%s%s\n",
                    c.passed ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                    c.threshold, c.detail.empty() ? "" : "  ",
                    c.detail.c_str());
        if (c.passed) ++passed;
    }
    std::printf("suite %s: %d/%zu passed\n", suite.c_str(), passed, checks.size());
    return verify::all_passed(checks) ? kExitOk : kExitVerifyFailure;
}

int cmd_equivalence(CLI::App* cmd, CliOptions& o) {
    if (!o.config_path.empty()) apply_config(load_config(o.config_path), cmd, o);
    PhysicalParams p = params_from(o);
    if (p.nu == 0.0) p.nu = 0.5 * p.omega;  // nu is ignored by the swap anyway
    const auto rep = equivalence::nonequivalence_report(p);
    const auto ctl = equivalence::single_photon_control(p);
    std::cout << "omega=" << fmt17(p.omega) << '\n';
    std::cout << "p_atom_swapped=" << fmt17(rep.p_atom_swapped.value) << '\n';
    std::cout << "p_mirror_swapped_taylor=" << fmt17(rep.p_mirror_swapped.value) << '\n';
    std::cout << "p_mirror_swapped_exact=" << fmt17(rep.p_mirror_exact_swapped.value)
              << '\n';
    std::cout << "rel_difference=" << fmt17(rep.rel_difference) << '\n';
    std::cout << "theta_bar=" << fmt17(rep.p_atom_swapped.angles.theta_bar) << '\n';
    std::cout << "theta_dprime=" << fmt17(rep.p_atom_swapped.angles.theta_dprime)
              << '\n';
    std::cout << "angle_match=" << (rep.angle_match ? 1 : 0) << '\n';
    std::cout << "planck_match=" << (rep.planck_match ? 1 : 0) << '\n';
    std::cout << "control_p_atom=" << fmt17(ctl.p_atom) << '\n';
    std::cout << "control_p_mirror=" << fmt17(ctl.p_mirror) << '\n';
    std::cout << "control_rel_difference=" << fmt17(ctl.rel_difference) << '\n';
    const bool degenerate =
        rep.p_atom_swapped.value == 0.0 && rep.p_mirror_exact_swapped.value == 0.0;
    std::string verdict;
    if (degenerate) verdict = "INCONCLUSIVE";
    else if (rep.rel_difference > 10.0 * ctl.rel_difference) verdict = "NONEQUIVALENT";
    else verdict = "EQUIVALENT";
    std::cout << "verdict=" << verdict << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"acceleration-radiation probabilities for a two-photon atom-mirror system"};
    app.require_subcommand(1);

    CliOptions eval_o, sweep_o, equiv_o;
    std::string suite;
    std::vector<std::string> tols;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one configuration");
    add_param_flags(eval_cmd, eval_o);
    eval_cmd->add_option("--case", eval_o.case_name, "atom | mirror");
    eval_cmd->add_option("--method", eval_o.method_name,
                         "exact | taylor | small-beta | oracle");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    add_param_flags(sweep_cmd, sweep_o);
    sweep_cmd->add_option("--case", sweep_o.case_name, "atom | mirror");
    sweep_cmd->add_option("--method", sweep_o.method_name,
                          "exact | taylor | small-beta | oracle");
    sweep_cmd->add_option("--preset", sweep_o.preset, "fig1 | fig2 | fig3");
    sweep_cmd->add_option("--var", sweep_o.variable, "omega | nu | z0 | a");
    sweep_cmd->add_option("--from", sweep_o.from, "sweep start (SI)");
    sweep_cmd->add_option("--to", sweep_o.to, "sweep end (SI)");
    sweep_cmd->add_option("--points", sweep_o.points, "grid points (>= 2)");
    sweep_cmd->add_option("--scale", sweep_o.scale, "linear | log");
    sweep_cmd->add_option("--output,-o", sweep_o.output, "CSV path ('-' = stdout)");
    sweep_cmd->add_option("--jobs", sweep_o.jobs,
                          "worker threads (default: ACCELRAD_JOBS or 1)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite,
                           "special | integrals | figures | equivalence")
        ->required();
    verify_cmd->add_option("--tol", tols, "override: name=value (repeatable)");

    CLI::App* equiv_cmd =
        app.add_subcommand("equivalence", "dual-photon exchange report + control");
    add_param_flags(equiv_cmd, equiv_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval_cmd, eval_o);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_cmd, sweep_o);
        if (verify_cmd->parsed()) return cmd_verify(suite, tols);
        if (equiv_cmd->parsed()) return cmd_equivalence(equiv_cmd, equiv_o);
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
