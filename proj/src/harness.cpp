#include "waveaug/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace waveaug {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::runtime_error("unknown key '" + it.key() + "' in " + where);
}

AugmentationPolicy parse_policy(const std::string& method, const json& obj,
                                const std::string& where) {
    reject_unknown_keys(obj, {"wavelet", "level", "rates", "rate", "sampling_rate"}, where);
    AugmentationPolicy p;
    p.method = aug_method_from_string(method);
    if (obj.contains("wavelet")) p.wavelet = obj.at("wavelet").get<std::string>();
    if (obj.contains("level")) p.level = obj.at("level").get<int>();
    if (obj.contains("rates")) p.rates = obj.at("rates").get<std::vector<double>>();
    if (obj.contains("rate")) p.rate = obj.at("rate").get<double>();
    if (obj.contains("sampling_rate")) p.sampling_rate = obj.at("sampling_rate").get<double>();
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw std::runtime_error(where + ": " + e.what());
    }
    return p;
}

struct TripleKey {
    std::string dataset, method;
    int horizon;
    std::uint64_t seed;
    long fraction_key;  // fraction * 1e6, avoids float map keys

    auto operator<=>(const TripleKey&) const = default;
};

TripleKey key_of(const ResultRecord& r) {
    return {r.dataset, r.method, r.horizon, r.seed, std::lround(r.fraction * 1e6)};
}

std::string ledger_line(const ResultRecord& r) {
    std::string s = "{\"dataset\":\"" + r.dataset + "\",\"horizon\":" + std::to_string(r.horizon) +
                    ",\"method\":\"" + r.method + "\",\"seed\":" + std::to_string(r.seed) +
                    ",\"fraction\":" + fmt_double(r.fraction) + ",\"mse\":" + fmt_double(r.mse) +
                    ",\"mae\":" + fmt_double(r.mae) +
                    ",\"best_epoch\":" + std::to_string(r.best_epoch) + "}";
    return s;
}

bool is_wave(const std::string& m) { return m == "wave_mask" || m == "wave_mix"; }
bool is_freq(const std::string& m) { return m == "freq_mask" || m == "freq_mix"; }

}  // namespace

AugmentationPolicy ExperimentSpec::resolve_policy(const std::string& method, int horizon) const {
    if (method == "none") {
        AugmentationPolicy p;
        p.method = AugMethod::none;
        return p;
    }
    if (auto it = policies.find({method, horizon}); it != policies.end()) return it->second;
    if (auto it = policies.find({method, -1}); it != policies.end()) return it->second;
    throw std::runtime_error("no policy configured for method '" + method + "' at horizon " +
                             std::to_string(horizon));
}

ExperimentSpec parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config '" + path + "': " + e.what());
    }

    reject_unknown_keys(root,
                        {"dataset", "lookback", "horizons", "methods", "policies", "train",
                         "n_repeats", "downsample_fractions", "out_dir"},
                        "config root");

    ExperimentSpec spec;

    const json& ds = root.at("dataset");
    reject_unknown_keys(ds, {"name", "path", "synthetic"}, "dataset");
    spec.dataset.name = ds.at("name").get<std::string>();
    if (ds.contains("synthetic")) {
        const json& sy = ds.at("synthetic");
        reject_unknown_keys(sy, {"timesteps", "channels", "seed", "noise_std"},
                            "dataset.synthetic");
        spec.dataset.synthetic = true;
        if (sy.contains("timesteps")) spec.dataset.timesteps = sy.at("timesteps").get<Eigen::Index>();
        if (sy.contains("channels")) spec.dataset.channels = sy.at("channels").get<Eigen::Index>();
        if (sy.contains("seed")) spec.dataset.seed = sy.at("seed").get<std::uint64_t>();
        if (sy.contains("noise_std")) spec.dataset.noise_std = sy.at("noise_std").get<double>();
    } else {
        spec.dataset.path = ds.at("path").get<std::string>();
    }

    spec.lookback = root.at("lookback").get<int>();
    spec.horizons = root.at("horizons").get<std::vector<int>>();
    spec.methods = root.at("methods").get<std::vector<std::string>>();
    if (spec.horizons.empty() || spec.methods.empty())
        throw std::runtime_error("config needs at least one horizon and one method");
    for (const auto& m : spec.methods) aug_method_from_string(m);  // validates names

    if (root.contains("train")) {
        const json& tr = root.at("train");
        reject_unknown_keys(
            tr, {"epochs", "patience", "batch_size", "learning_rate", "lr_decay", "kernel"},
            "train");
        if (tr.contains("epochs")) spec.train.epochs = tr.at("epochs").get<int>();
        if (tr.contains("patience")) spec.train.patience = tr.at("patience").get<int>();
        if (tr.contains("batch_size")) spec.train.batch_size = tr.at("batch_size").get<int>();
        if (tr.contains("learning_rate"))
            spec.train.learning_rate = tr.at("learning_rate").get<double>();
        if (tr.contains("lr_decay")) spec.train.lr_decay = tr.at("lr_decay").get<double>();
        if (tr.contains("kernel")) spec.train.kernel = tr.at("kernel").get<int>();
    }
    if (spec.train.epochs < 1 || spec.train.batch_size < 1 ||
        spec.train.patience > spec.train.epochs)
        throw std::runtime_error("train block violates epochs >= 1, batch_size >= 1, "
                                 "patience <= epochs");

    if (root.contains("n_repeats")) spec.n_repeats = root.at("n_repeats").get<int>();
    if (spec.n_repeats < 1) throw std::runtime_error("n_repeats must be >= 1");
    if (root.contains("downsample_fractions"))
        spec.downsample_fractions = root.at("downsample_fractions").get<std::vector<double>>();
    for (double f : spec.downsample_fractions)
        if (!(f > 0.0 && f <= 1.0))
            throw std::runtime_error("downsample fractions must be in (0, 1]");
    if (root.contains("out_dir")) spec.out_dir = root.at("out_dir").get<std::string>();

    if (root.contains("policies")) {
        const json& pol = root.at("policies");
        for (auto it = pol.begin(); it != pol.end(); ++it) {
            aug_method_from_string(it.key());
            for (auto ph = it.value().begin(); ph != it.value().end(); ++ph) {
                const int horizon = ph.key() == "default" ? -1 : std::stoi(ph.key());
                spec.policies[{it.key(), horizon}] = parse_policy(
                    it.key(), ph.value(), "policies." + it.key() + "." + ph.key());
            }
        }
    }
    // every (method, horizon) combination must resolve now, not at run time
    for (const auto& m : spec.methods)
        for (int h : spec.horizons) spec.resolve_policy(m, h);

    return spec;
}

Dataset load_dataset(const DatasetSpec& spec) {
    if (spec.synthetic) {
        Dataset ds = make_synthetic_seasonal(spec.timesteps, spec.channels, spec.seed,
                                             spec.noise_std);
        ds.name = spec.name;
        return ds;
    }
    return load_csv(spec.path, spec.name);
}

std::vector<ResultRecord> read_ledger(const std::string& path) {
    std::vector<ResultRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::runtime_error("ledger '" + path + "' line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
        ResultRecord r;
        r.dataset = j.at("dataset").get<std::string>();
        r.horizon = j.at("horizon").get<int>();
        r.method = j.at("method").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.fraction = j.at("fraction").get<double>();
        r.mse = j.at("mse").get<double>();
        r.mae = j.at("mae").get<double>();
        r.best_epoch = j.at("best_epoch").get<int>();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ResultRecord> run_experiment(const ExperimentSpec& spec) {
    const Dataset ds = load_dataset(spec.dataset);
    std::filesystem::create_directories(spec.out_dir);
    const std::string ledger_path = spec.out_dir + "/ledger.jsonl";

    std::vector<ResultRecord> records = read_ledger(ledger_path);
    std::set<TripleKey> done;
    for (const auto& r : records) done.insert(key_of(r));

    std::ofstream ledger(ledger_path, std::ios::app);
    if (!ledger) throw std::runtime_error("cannot write ledger '" + ledger_path + "'");

    std::vector<double> fractions = spec.downsample_fractions;
    if (fractions.empty()) fractions.push_back(1.0);

    for (double fraction : fractions) {
        for (int horizon : spec.horizons) {
            const ForecastTask task{spec.lookback, horizon, ds.name};
            const SplitRanges splits = split_622(ds.timesteps(), spec.lookback);
            Range train_range = splits.train;
            if (fraction < 1.0) train_range = downsample_train(train_range, fraction, task);

            const Normalizer norm = Normalizer::fit(ds.values, train_range);
            const Eigen::MatrixXd values = norm.apply(ds.values);
            auto [train_x, train_y] = make_windows(values, train_range, task);
            auto [val_x, val_y] = make_windows(values, splits.val, task);
            auto [test_x, test_y] = make_windows(values, splits.test, task);

            for (const auto& method : spec.methods) {
                const AugmentationPolicy policy = spec.resolve_policy(method, horizon);
                for (int seed = 0; seed < spec.n_repeats; ++seed) {
                    ResultRecord r;
                    r.dataset = ds.name;
                    r.horizon = horizon;
                    r.method = method;
                    r.seed = static_cast<std::uint64_t>(seed);
                    r.fraction = fraction;
                    if (done.count(key_of(r))) continue;

                    TrainConfig cfg = spec.train;
                    cfg.seed = r.seed;
                    cfg.policy = policy;
                    const auto t0 = std::chrono::steady_clock::now();
                    try {
                        const TrainResult tr = train(train_x, train_y, val_x, val_y, cfg);
                        std::tie(r.mse, r.mae) = evaluate(tr.best_params, test_x, test_y);
                        r.best_epoch = tr.best_epoch;
                    } catch (const std::exception& e) {
                        throw std::runtime_error("(" + ds.name + ", h=" +
                                                 std::to_string(horizon) + ", " + method +
                                                 ", seed=" + std::to_string(seed) +
                                                 "): " + e.what());
                    }
                    r.wall_time =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                            .count();
                    ledger << ledger_line(r) << "\n";
                    ledger.flush();
                    records.push_back(std::move(r));
                }
            }
        }
    }
    return records;
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate: no records");
    std::map<std::tuple<std::string, int, long, std::string>, std::vector<const ResultRecord*>>
        groups;
    for (const auto& r : records)
        groups[{r.dataset, r.horizon, std::lround(r.fraction * 1e6), r.method}].push_back(&r);

    std::vector<AggregateRow> rows;
    for (const auto& [key, members] : groups) {
        AggregateRow row;
        row.dataset = std::get<0>(key);
        row.horizon = std::get<1>(key);
        row.fraction = static_cast<double>(std::get<2>(key)) / 1e6;
        row.method = std::get<3>(key);
        row.n = static_cast<int>(members.size());
        auto stats = [&](auto getter, double& mean, double& sd) {
            double s = 0.0;
            for (const auto* r : members) s += getter(*r);
            mean = s / row.n;
            double ss = 0.0;
            for (const auto* r : members) ss += (getter(*r) - mean) * (getter(*r) - mean);
            sd = row.n > 1 ? std::sqrt(ss / (row.n - 1)) : 0.0;
        };
        stats([](const ResultRecord& r) { return r.mse; }, row.mse_mean, row.mse_std);
        stats([](const ResultRecord& r) { return r.mae; }, row.mae_mean, row.mae_std);
        rows.push_back(std::move(row));
    }

    // rank by MSE within (dataset, horizon, fraction)
    std::map<std::tuple<std::string, int, long>, std::vector<AggregateRow*>> families;
    for (auto& row : rows)
        families[{row.dataset, row.horizon, std::lround(row.fraction * 1e6)}].push_back(&row);
    for (auto& [k, fam] : families) {
        std::sort(fam.begin(), fam.end(),
                  [](const AggregateRow* a, const AggregateRow* b) {
                      return a->mse_mean < b->mse_mean;
                  });
        for (size_t i = 0; i < fam.size(); ++i) fam[i]->rank = static_cast<int>(i) + 1;
    }
    return rows;
}

void emit_report(const std::vector<AggregateRow>& aggregates, const std::string& out_dir) {
    if (aggregates.empty()) throw std::invalid_argument("emit_report: nothing to report");
    std::filesystem::create_directories(out_dir);

    std::vector<AggregateRow> rows = aggregates;
    std::sort(rows.begin(), rows.end(), [](const AggregateRow& a, const AggregateRow& b) {
        return std::tie(a.dataset, a.horizon, a.fraction, a.method) <
               std::tie(b.dataset, b.horizon, b.fraction, b.method);
    });

    const std::string metrics_path = out_dir + "/metrics.csv";
    std::ofstream metrics(metrics_path);
    if (!metrics) throw std::runtime_error("cannot write '" + metrics_path + "'");
    metrics << "dataset,horizon,method,fraction,mse_mean,mse_std,mae_mean,mae_std,rank\n";
    for (const auto& r : rows)
        metrics << r.dataset << "," << r.horizon << "," << r.method << ","
                << fmt_double(r.fraction) << "," << fmt_double(r.mse_mean) << ","
                << fmt_double(r.mse_std) << "," << fmt_double(r.mae_mean) << ","
                << fmt_double(r.mae_std) << "," << r.rank << "\n";

    // cold-start plot data: best-of-family MSE per (dataset, horizon, fraction)
    std::set<std::string> datasets;
    std::set<long> fractions;
    for (const auto& r : rows) {
        datasets.insert(r.dataset);
        fractions.insert(std::lround(r.fraction * 1e6));
    }
    if (fractions.size() < 2) return;

    for (const auto& ds : datasets) {
        std::map<std::pair<int, long>, std::pair<double, double>> best;  // (wave, freq)
        for (const auto& r : rows) {
            if (r.dataset != ds) continue;
            auto& [wave, freq] = best.try_emplace({r.horizon, std::lround(r.fraction * 1e6)},
                                                  std::numeric_limits<double>::infinity(),
                                                  std::numeric_limits<double>::infinity())
                                     .first->second;
            if (is_wave(r.method)) wave = std::min(wave, r.mse_mean);
            if (is_freq(r.method)) freq = std::min(freq, r.mse_mean);
        }
        const std::string path = out_dir + "/coldstart_" + ds + ".csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << "horizon,fraction,wave_best_mse,freq_best_mse\n";
        for (const auto& [key, v] : best) {
            auto cell = [](double x) {
                return std::isinf(x) ? std::string() : fmt_double(x);
            };
            out << key.first << "," << fmt_double(static_cast<double>(key.second) / 1e6) << ","
                << cell(v.first) << "," << cell(v.second) << "\n";
        }
    }
}

}  // namespace waveaug
