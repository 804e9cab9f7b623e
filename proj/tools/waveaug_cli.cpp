#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "waveaug/harness.hpp"
#include "waveaug/spectral.hpp"

namespace {

using namespace waveaug;

std::string resolve_out_dir(const std::string& from_config, const std::string& from_flag) {
    if (!from_flag.empty()) return from_flag;
    if (const char* env = std::getenv("WAVEAUG_OUTDIR"); env && *env) return env;
    return from_config;
}

std::vector<double> parse_fractions(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

int cmd_run(const std::string& config_path, const std::string& out_flag,
            const std::string& fractions) {
    ExperimentSpec spec = parse_config(config_path);
    spec.out_dir = resolve_out_dir(spec.out_dir, out_flag);
    if (!fractions.empty()) spec.downsample_fractions = parse_fractions(fractions);
    const auto records = run_experiment(spec);
    emit_report(aggregate(records), spec.out_dir);
    std::cout << records.size() << " results in " << spec.out_dir << "/ledger.jsonl; report at "
              << spec.out_dir << "/metrics.csv\n";
    return 0;
}

int cmd_report(const std::string& ledger_path, const std::string& out_flag) {
    const auto records = read_ledger(ledger_path);
    if (records.empty()) throw std::runtime_error("ledger '" + ledger_path + "' is empty");
    const std::string out_dir = resolve_out_dir(".", out_flag);
    emit_report(aggregate(records), out_dir);
    std::cout << "report for " << records.size() << " records written to " << out_dir
              << "/metrics.csv\n";
    return 0;
}

int selftest() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        Rng rng(1);
        double worst = 0.0;
        for (const char* w : {"db1", "db2", "db5", "db26"}) {
            const FilterBank fb = filter_bank(w);
            Eigen::VectorXd x(360);
            for (auto& v : x.reshaped()) v = rng.uniform() * 20.0 - 10.0;
            const int lmax = std::min(3, max_level(x.size(), fb.length()));
            for (int level = 1; level <= lmax; ++level) {
                const auto wc = wavedec(x, fb, level);
                worst = std::max(worst, (waverec(wc, fb) - x).cwiseAbs().maxCoeff());
            }
        }
        check("wavelet perfect reconstruction < 1e-8", worst < 1e-8);
    }
    {
        Rng rng(2);
        double worst = 0.0;
        for (Eigen::Index n : {7, 64, 336, 1056}) {
            Eigen::VectorXd x(n);
            for (auto& v : x.reshaped()) v = rng.uniform() - 0.5;
            worst = std::max(worst, (irfft(rfft(x)) - x).cwiseAbs().maxCoeff());
        }
        check("fft roundtrip < 1e-10", worst < 1e-10);
    }
    {
        Rng rng(3);
        Eigen::MatrixXd s(96, 3);
        for (auto& v : s.reshaped()) v = rng.uniform();
        AugmentationPolicy p;
        p.method = AugMethod::wave_mask;
        p.wavelet = "db2";
        p.level = 2;
        p.rates = {0.0, 0.0, 0.0};
        const double e0 = (wave_mask(s, p, rng) - s).cwiseAbs().maxCoeff();
        p.rates = {1.0, 1.0, 1.0};
        const double e1 = wave_mask(s, p, rng).cwiseAbs().maxCoeff();
        check("wave_mask rate identities", e0 < 1e-8 && e1 < 1e-8);
    }
    {
        Rng rng(4);
        SeriesTensor x(4, 16, 2), y(4, 8, 2);
        for (Eigen::Index r = 0; r < 4; ++r)
            for (Eigen::Index c = 0; c < 2; ++c)
                for (Eigen::Index t = 0; t < 16; ++t) x(r, t, c) = rng.uniform();
        DLinearParams params = DLinearParams::zeros(16, 8, 5);
        for (auto& v : params.w_trend.reshaped()) v = rng.uniform() - 0.5;
        for (auto& v : params.w_resid.reshaped()) v = rng.uniform() - 0.5;
        const DLinearGrads g = dlinear_backward(params, x, y);
        // spot-check one entry against central differences
        const double eps = 1e-5;
        DLinearParams p2 = params;
        p2.w_trend(3, 7) += eps;
        const double up = mse_loss(dlinear_forward(p2, x), y);
        p2.w_trend(3, 7) -= 2 * eps;
        const double dn = mse_loss(dlinear_forward(p2, x), y);
        const double fd = (up - dn) / (2 * eps);
        check("gradient finite-difference spot check",
              std::abs(fd - g.w_trend(3, 7)) < 1e-6 * std::max(1.0, std::abs(fd)));
    }
    std::cout << (failures == 0 ? "selftest OK\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavelet/frequency time-series augmentation benchmark"};
    app.require_subcommand(1);

    std::string config_path, ledger_path, out_flag, fractions, format = "csv";

    auto* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", config_path, "JSON experiment config")->required();
    run->add_option("--out", out_flag, "output directory override");

    auto* report = app.add_subcommand("report", "aggregate a ledger into report files");
    report->add_option("ledger", ledger_path, "ledger.jsonl produced by run")->required();
    report->add_option("--format", format, "output format (csv)")
        ->check(CLI::IsMember({"csv"}));
    report->add_option("--out", out_flag, "output directory override");

    auto* coldstart = app.add_subcommand("coldstart", "cold-start downsampling sweep");
    coldstart->add_option("config", config_path, "JSON experiment config")->required();
    coldstart->add_option("--fractions", fractions, "comma-separated keep fractions")
        ->required();
    coldstart->add_option("--out", out_flag, "output directory override");

    auto* self = app.add_subcommand("selftest", "run built-in invariant checks");
    (void)self;

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_flag, "");
        if (report->parsed()) return cmd_report(ledger_path, out_flag);
        if (coldstart->parsed()) return cmd_run(config_path, out_flag, fractions);
        return selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
