#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "accelrad/sweep.hpp"

using namespace accelrad;

namespace {

std::string csv_string(const sweep::RunConfig& cfg) {
    auto rows = sweep::run_sweep(cfg);
    std::ostringstream os;
    sweep::write_csv(os, *cfg.sweep, rows);
    return os.str();
}

// --- CLI process helpers ----------------------------------------------------

const char* cli_path() { return std::getenv("ACCELRAD_BIN"); }

struct RunOutput {
    int exit_code = -1;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
    RunOutput out;
    const std::string out_path = "/tmp/accelrad_test_stdout.txt";
    const std::string cmd = std::string(cli_path()) + " " + args + " > " + out_path +
                            " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    out.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    out.stdout_text = ss.str();
    return out;
}

std::string grab_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + "=");
    if (pos == std::string::npos) return {};
    const auto end = text.find('\n', pos);
    return text.substr(pos + key.size() + 1, end - pos - key.size() - 1);
}

const char* kParams = "--a 1e15 --nu 1e4 --omega 1e5 --z0 0.01 --g 1e7 --c 3e8";

}  // namespace

TEST_CASE("sweep spec validation") {
    sweep::SweepSpec spec;
    spec.from = 10.0;
    spec.to = 5.0;
    CHECK_THROWS_AS(sweep::validate_spec(spec), NonPositiveInput);
    spec.to = 20.0;
    spec.points = 1;
    CHECK_THROWS_AS(sweep::validate_spec(spec), NonPositiveInput);
    spec.points = 4;
    spec.scale = sweep::Scale::log;
    spec.from = 0.0;
    CHECK_THROWS_AS(sweep::validate_spec(spec), NonPositiveInput);
    spec.from = 1.0;
    CHECK_NOTHROW(sweep::validate_spec(spec));
}

TEST_CASE("grid endpoints are hit exactly") {
    sweep::SweepSpec spec;
    spec.from = 2.0;
    spec.to = 32.0;
    spec.points = 5;
    spec.scale = sweep::Scale::log;
    const auto g = sweep::grid_values(spec);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 2.0);
    CHECK(g.back() == 32.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);

    spec.scale = sweep::Scale::linear;
    const auto gl = sweep::grid_values(spec);
    CHECK(gl[2] == doctest::Approx(17.0));
}

TEST_CASE("jobs default comes from ACCELRAD_JOBS") {
    ::setenv("ACCELRAD_JOBS", "3", 1);
    CHECK(sweep::resolve_jobs(0) == 3);
    CHECK(sweep::resolve_jobs(5) == 5);  // explicit request wins
    ::unsetenv("ACCELRAD_JOBS");
    CHECK(sweep::resolve_jobs(0) == 1);
}

TEST_CASE("presets exist and unknown names do not") {
    CHECK(sweep::preset("fig1").has_value());
    CHECK(sweep::preset("fig2").has_value());
    CHECK(sweep::preset("fig3").has_value());
    CHECK(!sweep::preset("fig9").has_value());
    const auto cfg = sweep::preset("fig2");
    CHECK(cfg->params.a == 1e15);
    CHECK(cfg->params.omega == 1e9);
    CHECK(cfg->params.g == 1e7);
    CHECK(cfg->params.c == 3e8);
    CHECK(cfg->sweep->case_ == sweep::Case::mirror);
}

TEST_CASE("sweep rows are complete, ordered, and deterministic across jobs") {
    sweep::RunConfig cfg;
    cfg.params.a = 1e15;
    cfg.params.nu = 1e4;
    cfg.params.omega = 1e5;
    cfg.params.z0 = 0.01;
    cfg.params.g = 1e7;
    cfg.params.c = 3e8;
    sweep::SweepSpec spec;
    spec.variable = sweep::Variable::omega;
    spec.from = 1e4;
    spec.to = 1e6;
    spec.points = 21;
    spec.scale = sweep::Scale::log;
    spec.case_ = sweep::Case::atom;
    spec.method = sweep::MethodSel::exact;
    cfg.sweep = spec;

    cfg.jobs = 1;
    const std::string serial = csv_string(cfg);
    cfg.jobs = 4;
    const std::string parallel = csv_string(cfg);
    CHECK(serial == parallel);

    for (const auto& row : sweep::run_sweep(cfg)) {
        REQUIRE(row.result.has_value());
        CHECK(row.result->value >= 0.0);
    }

    // header + 21 rows
    int lines = 0;
    for (char ch : serial)
        if (ch == '\n') ++lines;
    CHECK(lines == 22);
    CHECK(serial.rfind("index,variable,value,P,log10P,theta,planck,warnings\n", 0) == 0);
}

TEST_CASE("per-point failures become error rows and the sweep continues") {
    sweep::RunConfig cfg;
    cfg.params.a = 1e15;
    cfg.params.nu = 1e6;
    cfg.params.omega = 1e6;
    cfg.params.z0 = 0.01;
    cfg.params.g = 1e7;
    cfg.params.c = 3e8;
    sweep::SweepSpec spec;
    spec.variable = sweep::Variable::z0;
    spec.from = 50.0;
    spec.to = 130.0;  // wedge boundary c^2/a = 90 m sits inside the range
    spec.points = 9;
    spec.scale = sweep::Scale::linear;
    spec.case_ = sweep::Case::atom;
    spec.method = sweep::MethodSel::exact;
    cfg.sweep = spec;
    const auto rows = sweep::run_sweep(cfg);
    int ok = 0, failed = 0;
    for (const auto& row : rows) {
        if (row.result) ++ok;
        else ++failed;
    }
    CHECK(ok >= 4);
    CHECK(failed >= 4);
    const std::string csv = csv_string(cfg);
    CHECK(csv.find("error:") != std::string::npos);
}

// --- CLI binary contract -----------------------------------------------------

TEST_CASE("cli eval prints a key=value record and exits 0") {
    REQUIRE(cli_path() != nullptr);
    const auto out = run_cli(std::string("eval --case atom --method exact ") + kParams);
    CHECK(out.exit_code == 0);
    CHECK(std::stod(grab_value(out.stdout_text, "value")) > 0.0);
    CHECK(!grab_value(out.stdout_text, "theta").empty());
    CHECK(!grab_value(out.stdout_text, "planck_factor").empty());
}

TEST_CASE("cli eval with g = 0 reports value 0 and exits 0") {
    const auto out = run_cli(
        "eval --case atom --method exact --a 1e15 --nu 1e4 --omega 1e5 --z0 0.01 "
        "--g 0 --c 3e8");
    CHECK(out.exit_code == 0);
    CHECK(std::stod(grab_value(out.stdout_text, "value")) == 0.0);
}

TEST_CASE("cli input errors exit 2") {
    //wedge violation: c^2/a = 0.09 < z0
    CHECK(run_cli("eval --case atom --method exact --a 1e18 --nu 1e4 --omega 1e5 "
                  "--z0 1 --g 1e7 --c 3e8")
              .exit_code == 2);
    CHECK(run_cli("verify --suite nosuchsuite").exit_code == 2);
    CHECK(run_cli("eval --case neither --method exact").exit_code == 2);
    CHECK(run_cli("sweep --case atom --method exact --var omega --from 10 --to 1 "
                  "--points 5")
              .exit_code == 2);
}

TEST_CASE("cli verify runs the special suite green") {
    const auto out = run_cli("verify --suite special");
    CHECK(out.exit_code == 0);
    CHECK(out.stdout_text.find("gamma-imag-modulus-identity") != std::string::npos);
    CHECK(out.stdout_text.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cli numerical non-convergence exits 3") {
    const auto out = run_cli(
        "eval --case mirror --method oracle --a 1e15 --nu 8.3e21 --omega 1e9 "
        "--z0 0.01 --g 1e7 --c 3e8");
    CHECK(out.exit_code == 3);
}

TEST_CASE("cli sweep writes header plus one row per point") {
    const std::string path = "/tmp/accelrad_test_sweep.csv";
    const auto out = run_cli(
        std::string("sweep --case atom --method exact --var omega --from 1e5 "
                    "--to 1e6 --points 2 --scale log --output ") +
        path + " --a 1e15 --nu 1e4 --z0 0.01 --g 1e7 --c 3e8 --omega 1e5");
    CHECK(out.exit_code == 0);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 3);
}

TEST_CASE("cli sweep output is byte-identical across runs") {
    const std::string p1 = "/tmp/accelrad_det_1.csv";
    const std::string p2 = "/tmp/accelrad_det_2.csv";
    const std::string args =
        "sweep --preset fig2 --points 40 --jobs 2 --output ";
    CHECK(run_cli(args + p1).exit_code == 0);
    CHECK(run_cli(args + p2).exit_code == 0);
    std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().size() > 1000);
}

TEST_CASE("cli config file is read and flags override it") {
    const std::string cfg_path = "/tmp/accelrad_test_config.txt";
    {
        std::ofstream cfg(cfg_path);
        cfg << "# run manifest\n";
        cfg << "a = 1e15\n";
        cfg << "nu = 1e4\n";
        cfg << "omega = 1e5\n";
        cfg << "z0 = 0.01\n";
        cfg << "g = 1e7\n";
        cfg << "c = 3e8\n";
        cfg << "case = atom\n";
        cfg << "method = exact\n";
    }
    const auto from_cfg = run_cli("eval --config " + cfg_path);
    CHECK(from_cfg.exit_code == 0);
    const double v_cfg = std::stod(grab_value(from_cfg.stdout_text, "value"));

    const auto overridden = run_cli("eval --config " + cfg_path + " --g 2e7");
    CHECK(overridden.exit_code == 0);
    const double v_ov = std::stod(grab_value(overridden.stdout_text, "value"));
    CHECK(v_ov == doctest::Approx(4.0 * v_cfg).epsilon(1e-14));
}

TEST_CASE("cli equivalence verdict at the reference point") {
    const auto out = run_cli(
        "equivalence --a 1e15 --omega 1e6 --z0 0.01 --g 1e7 --c 3e8 --nu 5e5");
    CHECK(out.exit_code == 0);
    CHECK(grab_value(out.stdout_text, "verdict") == "NONEQUIVALENT");
    CHECK(grab_value(out.stdout_text, "angle_match") == "1");
    CHECK(grab_value(out.stdout_text, "planck_match") == "1");

    const auto inconclusive = run_cli(
        "equivalence --a 1e15 --omega 1e6 --z0 0.01 --g 0 --c 3e8 --nu 5e5");
    CHECK(inconclusive.exit_code == 0);
    CHECK(grab_value(inconclusive.stdout_text, "verdict") == "INCONCLUSIVE");
}
