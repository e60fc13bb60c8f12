/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "accelrad/closedform.hpp"
#include "accelrad/params.hpp"

namespace accelrad::sweep {

enum class Variable { omega, nu, z0, a };
enum class Scale { linear, log };
enum class Case { atom, mirror };
enum class MethodSel { exact, taylor, small_beta, oracle };

const char* variable_name(Variable v);
std::optional<Variable> parse_variable(const std::string& s);
std::optional<Scale> parse_scale(const std::string& s);
std::optional<Case> parse_case(const std::string& s);
std::optional<MethodSel> parse_method(const std::string& s);

struct SweepSpec {
    Variable variable = Variable::omega;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    Scale scale = Scale::log;
    Case case_ = Case::atom;
    MethodSel method = MethodSel::exact;
};

struct RunConfig {
    PhysicalParams params;
    std::optional<SweepSpec> sweep;
    std::string output_path;
    std::map<std::string, double> tolerance_overrides;
    int jobs = 0;  // 0: resolve from ACCELRAD_JOBS, else 1
};

// Throws NonPositiveInput on an invalid spec (from >= to, points < 2,
// log scale with from <= 0).
void validate_spec(const SweepSpec& spec);

std::vector<double> grid_values(const SweepSpec& spec);

struct SweepRow {
    int index = 0;
    double value = 0.0;  // swept-variable value
    std::optional<closedform::ProbabilityResult> result;
    std::string error;  // non-empty when the point failed
    bool input_error = false;  // validation failure rather than numerical
};

// Evaluates one point of the spec'd case/method with the variable overridden.
closedform::ProbabilityResult evaluate_point(const PhysicalParams& base,
                                             const SweepSpec& spec, double value);

// Runs the sweep with up to `jobs` worker threads; rows come back in index
// order regardless of scheduling. Per-point exceptions become row errors.
std::vector<SweepRow> run_sweep(const RunConfig& config);

// CSV contract: header
//   index,variable,value,P,log10P,theta,planck,warnings
// fixed 17-significant-digit scientific notation, '.' decimal, '\n' line
// ends; byte-deterministic for identical config. Failed points keep their
// index/variable/value and carry the error in the warnings column.
void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows);

// Figure presets pinning a = 1e15 m/s^2, z0 = 0.01 m, g = 1e7 rad/s,
// c = 3e8 m/s:
//   fig1: nu = 1e4, atom case, sweep omega in [1e3, 1e7] log, 400 points
//   fig2: omega = 1e9, mirror exact, sweep nu in [1e3, 1e7] log, 400 points
//   fig3: omega = 1e9, mirror small-beta, sweep nu in [1e3, 1e7] log, 400 points
std::optional<RunConfig> preset(const std::string& name);

int resolve_jobs(int requested);

}  // namespace accelrad::sweep
