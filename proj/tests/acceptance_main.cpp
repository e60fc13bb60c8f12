/*
 * accelrad - excitation probabilities of an atom-mirror system
 * with two scalar photons and a relative acceleration.
 *
 * Apache License 2.0
 */
// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "accelrad/closedform.hpp"
#include "accelrad/equivalence.hpp"
#include "accelrad/oracle.hpp"
#include "accelrad/params.hpp"
#include "accelrad/special.hpp"
#include "accelrad/sweep.hpp"
#include "accelrad/verify.hpp"
#include "dd_series.hpp"

using namespace accelrad;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

double now_s() {
    using clock = std::chrono::steady_clock;
    static const auto t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

void report(const char* name, bool passed, const std::string& detail,
            double seconds, double budget_s) {
    const bool in_budget = seconds < budget_s;
    const bool ok = passed && in_budget;
    std::printf("[%s] %-28s %s (%.1f s, budget %.0f s)\n", ok ? "PASS" : "FAIL",
                name, detail.c_str(), seconds, budget_s);
    if (!ok) ++g_failures;
}

double rel(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_special_functions() {
    const double t0 = now_s();
    bool ok = true;
    std::string detail;

    const auto checks = verify::verify_special();
    double worst_named = 0.0;
    for (const auto& c : checks) {
        ok = ok && c.passed;
        if (c.name != "hyp2f3-conjugation") worst_named = std::max(worst_named, c.measured);
    }

    // 2F3 against the double-double partial-sum oracle, 50 random points
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> ub(0.3, 3.0);
    std::uniform_real_distribution<double> uz(-12.0, 12.0);
    double worst_dd = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Complex a1(u(rng), u(rng));
        const Complex a2(u(rng), u(rng));
        const double b1 = ub(rng), b2 = ub(rng), b3 = ub(rng);
        const double z = uz(rng);
        const Complex got = special::hyp2f3(a1, a2, b1, b2, b3, z);
        const Complex want = ddtest::to_complex(ddtest::hyp2f3_dd(a1, a2, b1, b2, b3, z));
        worst_dd = std::max(worst_dd, std::abs(got - want) / std::abs(want));
    }
    ok = ok && worst_dd <= 1e-12;

    detail = fmt("identity/recurrence/bessel worst %.2e, 2F3-vs-oracle %.2e",
                 worst_named, worst_dd);
    report("special-function-identities", ok, detail, now_s() - t0, 30.0);
}

void criterion_closed_vs_oracle() {
    const double t0 = now_s();
    const auto checks = verify::verify_integrals();
    double atom_worst = 1.0, mirror_worst = 1.0;
    for (const auto& c : checks) {
        if (c.name == "atom-closed-vs-oracle") atom_worst = c.measured;
        if (c.name == "mirror-closed-vs-oracle") mirror_worst = c.measured;
    }
    const bool ok = atom_worst <= 1e-4 && mirror_worst <= 1e-4;
    report("closed-form-vs-oracle", ok,
           fmt("atom worst %.2e, mirror worst %.2e (tol 1e-4)", atom_worst,
               mirror_worst),
           now_s() - t0, 600.0);
}

void criterion_internal_consistency() {
    const double t0 = now_s();

    // (a) the two expanded atom displays agree through the Planck identity
    double worst_planck = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double alpha = 0.05 * std::pow(30.0 / 0.05, double(i) / 199.0);
        const auto gam = special::gamma_imag_axis(alpha);
        const double lhs = 4.0 * std::exp(-kPi * alpha) * gam.modulus * gam.modulus;
        const double rhs = (8.0 * kPi / alpha) * closedform::planck_factor(2.0 * kPi * alpha);
        worst_planck = std::max(worst_planck, rel(lhs, rhs));
    }
    const bool ok_planck = worst_planck <= 1e-12;

    // (b) exact mirror display vs the amplitude assembly (or a documented
    //     systematic discrepancy report)
    double worst_display = 0.0;
    double worst_display_beta = 0.0, worst_display_psi = 0.0;
    for (int i = 0; i < 25; ++i)
        for (int j = 0; j < 5; ++j)
            for (double alpha : {0.1, 1.0, 5.0}) {
                DimensionlessGroups gr;
                gr.beta = 0.02 * std::pow(150.0, double(i) / 24.0);
                gr.psi_z = 0.01 * std::pow(50.0, double(j) / 4.0);
                gr.alpha = alpha;
                gr.phi_z = gr.beta * gr.psi_z / gr.alpha;
                if (std::abs(std::cos(closedform::theta_mirror(gr))) < 0.05) continue;
                const double d = rel(closedform::mirror_exact_probability_core(gr),
                                     closedform::mirror_display_exact_core(gr));
                if (d > worst_display) {
                    worst_display = d;
                    worst_display_beta = gr.beta;
                    worst_display_psi = gr.psi_z;
                }
            }
    const bool ok_display = worst_display <= 1e-8;
    if (!ok_display) {
        std::printf(
            "  display-discrepancy report: max rel dev %.3e at beta=%.3f, "
            "psi_z=%.3f (secant display vs assembly)\n",
            worst_display, worst_display_beta, worst_display_psi);
    }

    // (c) truncated finite-interval family vs the exact family, 1% demanded
    //     for psi_z <= 0.033 across beta in [0.01, 3]
    double worst_taylor = 0.0, worst_tb = 0.0, worst_tp = 0.0;
    double first_fail_beta = 0.0;
    int fail_count = 0, total = 0;
    for (double psi : {0.01, 0.02, 0.033}) {
        for (int i = 0; i < 100; ++i) {
            const double beta = 0.01 * std::pow(300.0, double(i) / 99.0);
            DimensionlessGroups gr;
            gr.alpha = 1.0;
            gr.beta = beta;
            gr.psi_z = psi;
            gr.phi_z = beta * psi;
            const double d = rel(closedform::mirror_exact_probability_core(gr),
                                 closedform::mirror_taylor_probability_core(gr));
            ++total;
            if (d > 0.01) {
                ++fail_count;
                if (first_fail_beta == 0.0) first_fail_beta = beta;
            }
            if (d > worst_taylor) {
                worst_taylor = d;
                worst_tb = beta;
                worst_tp = psi;
            }
        }
    }
    const bool ok_taylor = fail_count == 0;
    if (!ok_taylor) {
        std::printf(
            "  truncated-form report: %d/%d grid points exceed 1%% (first at "
            "beta=%.3f); max rel dev %.3e at beta=%.2f, psi_z=%.3f.\n"
            "  The truncated amplitude keeps only the leading term of the "
            "finite-interval integral; the dropped piece is O(psi*(beta+psi)) "
            "relative and dominates wherever that integral carries the "
            "probability, so a 1%% match across beta in [0.01,3] is not "
            "attainable for any psi_z in range. The truncated and exact "
            "families do agree to ~0.1%% at the reference point (beta~0.1).\n",
            fail_count, total, first_fail_beta, worst_taylor, worst_tb, worst_tp);
    }

    report("internal-consistency", ok_planck && ok_display && ok_taylor,
           fmt("planck-identity %.2e; display-vs-assembly %.2e; "
               "truncated-vs-exact worst %.2e",
               worst_planck, worst_display, worst_taylor),
           now_s() - t0, 120.0);
}

void criterion_magnitude_claim() {
    const double t0 = now_s();
    auto cfg = sweep::preset("fig2");
    const auto rows = sweep::run_sweep(*cfg);
    double peak = 0.0;
    for (const auto& row : rows)
        if (row.result) peak = std::max(peak, row.result->value);
    const bool ok = peak >= 1e-5 && peak <= 1e-3;
    report("peak-magnitude-window", ok,
           fmt("fig2 peak %.3e in [1e-5, 1e-3]", peak), now_s() - t0, 60.0);
}

void criterion_oscillation() {
    const double t0 = now_s();
    auto cfg = sweep::preset("fig1");
    const auto rows = sweep::run_sweep(*cfg);
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        if (!rows[i - 1].result || !rows[i].result || !rows[i + 1].result) continue;
        if (rows[i].result->value > rows[i - 1].result->value &&
            rows[i].result->value > rows[i + 1].result->value)
            ++maxima;
    }

    PhysicalParams p;
    p.a = 1e15;
    p.z0 = 0.01;
    p.g = 1e7;
    p.c = 3e8;
    p.omega = 1e6;
    p.nu = 3e7;
    const double period = kPi * p.c / p.nu;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uz(0.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        p.z0 = uz(rng);
        PhysicalParams q = p;
        q.z0 = p.z0 + period;
        worst = std::max(worst, rel(closedform::p_exc_atom(p).value,
                                    closedform::p_exc_atom(q).value));
    }

    const bool ok = maxima >= 3 && worst <= 1e-12;
    report("oscillation-claims", ok,
           fmt("fig1 local maxima %.0f (>=3); z0-periodicity worst %.2e (<=1e-12)",
               double(maxima), worst),
           now_s() - t0, 120.0);
}

void criterion_nonequivalence() {
    const double t0 = now_s();
    PhysicalParams base;
    base.a = 1e15;
    base.z0 = 0.01;
    base.g = 1e7;
    base.c = 3e8;
    base.nu = 1e4;
    base.omega = 1e9;
    const auto grid = equivalence::default_omega_grid();
    const auto pts = equivalence::sweep_nonequivalence(base, grid, true);
    double min_dual = 1e300, max_control = 0.0;
    bool any_error = false;
    for (const auto& pt : pts) {
        if (!pt.report || !pt.control) {
            any_error = true;
            continue;
        }
        min_dual = std::min(min_dual, pt.report->rel_difference);
        max_control = std::max(max_control, pt.control->rel_difference);
    }
    const bool dual_ok = !any_error && min_dual > 0.01;
    const bool control_ok = max_control < 1e-3;
    if (!control_ok) {
        std::printf(
            "  control-discrepancy report: single-photon exchange mismatch "
            "%.3e with matched angles/planck factors\n",
            max_control);
    }
    report("non-equivalence", dual_ok && control_ok,
           fmt("dual min rel diff %.3f (>0.01); single-photon control max "
               "%.2e (<1e-3)",
               min_dual, max_control),
           now_s() - t0, 120.0);
}

void criterion_cli_contract(const std::string& cli) {
    const double t0 = now_s();
    if (cli.empty()) {
        report("cli-determinism", false, "no CLI path (pass --cli or set ACCELRAD_BIN)",
               now_s() - t0, 120.0);
        return;
    }
    auto run = [&](const std::string& args) {
        const std::string cmd = cli + " " + args + " > /dev/null 2> /dev/null";
        const int status = std::system(cmd.c_str());
        return (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    bool ok = true;
    std::string why;

    // byte-identical repeated sweeps
    const std::string f1 = "/tmp/accelrad_acc_1.csv";
    const std::string f2 = "/tmp/accelrad_acc_2.csv";
    ok &= run("sweep --preset fig2 --points 60 --jobs 2 --output " + f1) == 0;
    ok &= run("sweep --preset fig2 --points 60 --jobs 2 --output " + f2) == 0;
    const std::string csv1 = slurp(f1);
    if (csv1 != slurp(f2) || csv1.empty()) {
        ok = false;
        why += "csv-not-deterministic ";
    }
    if (csv1.rfind("index,variable,value,P,log10P,theta,planck,warnings\n", 0) != 0) {
        ok = false;
        why += "csv-header ";
    }

    // exit-code contract on forced errors
    if (run("eval --case atom --method exact --a 1e15 --nu 1e4 --omega 1e5 "
            "--z0 0.01 --g 1e7 --c 3e8") != 0) {
        ok = false;
        why += "eval-ok!=0 ";
    }
    if (run("eval --case atom --method exact --a 1e18 --nu 1e4 --omega 1e5 "
            "--z0 1 --g 1e7 --c 3e8") != 2) {
        ok = false;
        why += "wedge!=2 ";
    }
    if (run("verify --suite nosuch") != 2) {
        ok = false;
        why += "suite!=2 ";
    }
    if (run("eval --case mirror --method oracle --a 1e15 --nu 8.3e21 --omega 1e9 "
            "--z0 0.01 --g 1e7 --c 3e8") != 3) {
        ok = false;
        why += "noconv!=3 ";
    }

    report("cli-determinism", ok,
           ok ? "byte-identical CSV; exit codes 0/2/3 honored" : why,
           now_s() - t0, 120.0);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    if (cli.empty())
        if (const char* env = std::getenv("ACCELRAD_BIN")) cli = env;

    std::printf("acceptance suite\n");
    criterion_special_functions();
    criterion_closed_vs_oracle();
    criterion_internal_consistency();
    criterion_magnitude_claim();
    criterion_oscillation();
    criterion_nonequivalence();
    criterion_cli_contract(cli);
    std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
