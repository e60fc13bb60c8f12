/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
#include "accelrad/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "accelrad/oracle.hpp"

namespace accelrad::sweep {

const char* variable_name(Variable v) {
    switch (v) {
        case Variable::omega: return "omega";
        case Variable::nu: return "nu";
        case Variable::z0: return "z0";
        case Variable::a: return "a";
    }
    return "?";
}

std::optional<Variable> parse_variable(const std::string& s) {
    if (s == "omega") return Variable::omega;
    if (s == "nu") return Variable::nu;
    if (s == "z0") return Variable::z0;
    if (s == "a") return Variable::a;
    return std::nullopt;
}

std::optional<Scale> parse_scale(const std::string& s) {
    if (s == "linear") return Scale::linear;
    if (s == "log") return Scale::log;
    return std::nullopt;
}

std::optional<Case> parse_case(const std::string& s) {
    if (s == "atom") return Case::atom;
    if (s == "mirror") return Case::mirror;
    return std::nullopt;
}

std::optional<MethodSel> parse_method(const std::string& s) {
    if (s == "exact") return MethodSel::exact;
    if (s == "taylor") return MethodSel::taylor;
    if (s == "small-beta") return MethodSel::small_beta;
    if (s == "oracle") return MethodSel::oracle;
    return std::nullopt;
}

void validate_spec(const SweepSpec& spec) {
    if (!(spec.from < spec.to))
        throw NonPositiveInput("sweep: 'from' must be strictly below 'to'");
    if (spec.points < 2) throw NonPositiveInput("sweep: points must be >= 2");
    if (spec.scale == Scale::log && !(spec.from > 0.0))
        throw NonPositiveInput("sweep: log scale needs from > 0");
}

std::vector<double> grid_values(const SweepSpec& spec) {
    std::vector<double> out(spec.points);
    if (spec.scale == Scale::log) {
        const double l0 = std::log(spec.from);
        const double l1 = std::log(spec.to);
        for (int i = 0; i < spec.points; ++i)
            out[i] = std::exp(l0 + (l1 - l0) * double(i) / double(spec.points - 1));
    } else {
        for (int i = 0; i < spec.points; ++i)
            out[i] = spec.from + (spec.to - spec.from) * double(i) / double(spec.points - 1);
    }
    return out;
}

closedform::ProbabilityResult evaluate_point(const PhysicalParams& base,
                                             const SweepSpec& spec, double value) {
    PhysicalParams p = base;
    switch (spec.variable) {
        case Variable::omega: p.omega = value; break;
        case Variable::nu: p.nu = value; break;
        case Variable::z0: p.z0 = value; break;
        case Variable::a: p.a = value; break;
    }
    if (spec.case_ == Case::atom) {
        switch (spec.method) {
            case MethodSel::oracle: return oracle::p_exc_atom_oracle(p);
            case MethodSel::exact:
            case MethodSel::taylor:
            case MethodSel::small_beta: return closedform::p_exc_atom(p);
        }
    }
    switch (spec.method) {
        case MethodSel::exact: return closedform::p_exc_mirror_exact(p);
        case MethodSel::taylor: return closedform::p_exc_mirror_taylor(p);
        case MethodSel::small_beta: return closedform::p_exc_mirror_small_beta(p);
        case MethodSel::oracle: return oracle::p_exc_mirror_oracle(p);
    }
    throw Error("unreachable sweep method");
}

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ACCELRAD_JOBS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

std::vector<SweepRow> run_sweep(const RunConfig& config) {
    if (!config.sweep) throw NonPositiveInput("run_sweep: no sweep spec");
    const SweepSpec& spec = *config.sweep;
    validate_spec(spec);
    const std::vector<double> values = grid_values(spec);
    std::vector<SweepRow> rows(values.size());
    const int jobs = std::min<int>(resolve_jobs(config.jobs), int(values.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            rows[i].index = int(i);
            rows[i].value = values[i];
            try {
                rows[i].result = evaluate_point(config.params, spec, values[i]);
            } catch (const NonPositiveInput& e) {
                rows[i].error = e.what();
                rows[i].input_error = true;
            } catch (const WedgeViolation& e) {
                rows[i].error = e.what();
                rows[i].input_error = true;
            } catch (const Error& e) {
                rows[i].error = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return s;
}

}  // namespace

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows) {
    os << "index,variable,value,P,log10P,theta,planck,warnings\n";
    const char* var = variable_name(spec.variable);
    for (const auto& row : rows) {
        os << row.index << ',' << var << ',' << fmt17(row.value) << ',';
        if (row.result) {
            const auto& r = *row.result;
            const double theta = (spec.case_ == Case::atom) ? r.angles.theta
                                                            : r.angles.theta_prime;
            os << fmt17(r.value) << ',' << fmt17(r.log10_value) << ','
               << fmt17(theta) << ',' << fmt17(r.planck_factor) << ',';
            for (std::size_t i = 0; i < r.warnings.size(); ++i) {
                if (i) os << ';';
                os << r.warnings[i];
            }
        } else {
            os << ",,,,error:" << sanitize(row.error);
        }
        os << '\n';
    }
}

std::optional<RunConfig> preset(const std::string& name) {
    RunConfig cfg;
    cfg.params.a = 1e15;
    cfg.params.z0 = 0.01;
    cfg.params.g = 1e7;
    cfg.params.c = kSpeedOfLightRounded;
    SweepSpec spec;
    spec.points = 400;
    spec.scale = Scale::log;
    if (name == "fig1") {
        cfg.params.nu = 1e4;
        cfg.params.omega = 1e3;
        spec.variable = Variable::omega;
        spec.from = 1e3;
        spec.to = 1e7;
        spec.case_ = Case::atom;
        spec.method = MethodSel::exact;
    } else if (name == "fig2" || name == "fig3") {
        cfg.params.omega = 1e9;
        cfg.params.nu = 1e3;
        spec.variable = Variable::nu;
        spec.from = 1e3;
        spec.to = 1e7;
        spec.case_ = Case::mirror;
        spec.method = (name == "fig2") ? MethodSel::exact : MethodSel::small_beta;
    } else {
        return std::nullopt;
    }
    cfg.sweep = spec;
    return cfg;
}

}  // namespace accelrad::sweep
