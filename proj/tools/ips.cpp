#include "ips/dataset.hpp"
#include "ips/eval.hpp"
#include "ips/manifest.hpp"
#include "ips/oracle.hpp"
#include "ips/patterns.hpp"
#include "ips/sampler.hpp"
#include "ips/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

namespace {

using ips::BigInt;
using ips::Rational;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 42;

struct CommonOpts {
    std::string input;
    std::string output;
    std::uint64_t seed = kDefaultSeed;
    bool entropy = false;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_output = false) {
    cmd->add_option("--input", opts.input, "input CSV file")->required();
    auto* out = cmd->add_option("--output", opts.output, "output file path");
    if (needs_output) {
        out->required();
    }
    cmd->add_option("--seed", opts.seed, "random seed (default 42)");
    cmd->add_flag("--entropy", opts.entropy, "seed from system entropy instead of --seed");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = hardware default)");
}

std::uint64_t resolve_seed(const CommonOpts& opts) {
    if (!opts.entropy) {
        return opts.seed;
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) | rd();
}

// Parses a plain decimal like "0.35" into an exact rational.
Rational parse_decimal_fraction(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    BigInt digits = 0;
    BigInt den = 1;
    bool any = false, point = false;
    for (; i < text.size(); ++i) {
        if (text[i] == '.') {
            if (point) {
                throw ips::Error(ips::ErrorKind::usage, "invalid decimal: " + text);
            }
            point = true;
        } else if (text[i] >= '0' && text[i] <= '9') {
            digits = digits * 10 + (text[i] - '0');
            if (point) {
                den *= 10;
            }
            any = true;
        } else {
            throw ips::Error(ips::ErrorKind::usage, "invalid decimal: " + text);
        }
    }
    if (!any) {
        throw ips::Error(ips::ErrorKind::usage, "invalid decimal: " + text);
    }
    Rational r(digits, den);
    return negative ? -r : r;
}

std::pair<Rational, Rational> parse_band(const std::string& band) {
    const auto colon = band.find(':');
    if (colon == std::string::npos) {
        throw ips::Error(ips::ErrorKind::usage, "band must be lo:hi, e.g. 0.30:0.45");
    }
    return {parse_decimal_fraction(band.substr(0, colon)),
            parse_decimal_fraction(band.substr(colon + 1))};
}

// Fixed-point decimal rendering of an exact rational, trailing zeros trimmed.
std::string rational_decimal(const Rational& r, int places = 6) {
    BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    BigInt scaled = (num * scale * 2 + den) / (den * 2); // round half up
    std::string s = ips::decimal_string(scaled, places);
    return negative && s != "0" ? "-" + s : s;
}

struct LoadedDataset {
    ips::NumericalDataset data;
    std::string hash;
    double load_seconds = 0.0;
};

LoadedDataset load_input(const std::string& path) {
    const auto start = std::chrono::steady_clock::now();
    LoadedDataset out;
    out.hash = ips::file_hash_hex(path);
    out.data = ips::load_csv(path);
    out.load_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

class ManifestWriter {
  public:
    ManifestWriter(int argc, char** argv) {
        for (int i = 0; i < argc; ++i) {
            if (i > 0) {
                command_line_ += ' ';
            }
            command_line_ += argv[i];
        }
        started_ = ips::utc_timestamp_now();
        t0_ = std::chrono::steady_clock::now();
    }

    void phase(const std::string& name) {
        const auto now = std::chrono::steady_clock::now();
        phases_.emplace_back(name, std::chrono::duration<double>(now - t0_).count());
        t0_ = now;
    }

    // Writes <output>.manifest.json describing the files produced.
    void write(const CommonOpts& opts, std::uint64_t seed, const std::string& dataset_hash,
               const std::vector<std::string>& outputs) const {
        if (opts.output.empty()) {
            return;
        }
        ips::RunManifest manifest;
        manifest.command_line = command_line_;
        manifest.seed = seed;
        manifest.dataset_hash = dataset_hash;
        manifest.version = ips::kVersion;
        manifest.started_utc = started_;
        manifest.finished_utc = ips::utc_timestamp_now();
        manifest.phase_seconds = phases_;
        manifest.outputs = outputs;
        ips::write_manifest(manifest, opts.output + ".manifest.json");
    }

  private:
    std::string command_line_;
    std::string started_;
    std::chrono::steady_clock::time_point t0_;
    std::vector<std::pair<std::string, double>> phases_;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ips::Error(ips::ErrorKind::data, "cannot write output file: " + path);
    }
    return out;
}

std::vector<ips::Method> parse_method_list(const std::string& methods) {
    std::vector<ips::Method> out;
    std::string cur;
    for (char c : methods + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                out.push_back(ips::parse_method(cur));
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (out.empty()) {
        throw ips::Error(ips::ErrorKind::usage, "no method given");
    }
    return out;
}

int run_stats(const CommonOpts& opts) {
    const LoadedDataset loaded = load_input(opts.input);
    const auto& ds = loaded.data;
    std::size_t distinct = 0;
    for (const auto& index : ds.indexes) {
        distinct += index.size();
    }
    std::cout << "attributes: " << ds.n_attributes() << "\n";
    std::cout << "objects: " << ds.n_objects() << "\n";
    std::cout << "distinct values: " << distinct << "\n";
    std::cout << "|W| per attribute:";
    for (std::size_t m = 0; m < ds.n_attributes(); ++m) {
        std::cout << ' ' << ds.attributes[m] << '=' << ds.indexes[m].size();
    }
    std::cout << "\n";
    std::cout << "search space: " << ips::search_space_size(ds).str() << "\n";

    const ips::FipsState fips = ips::preprocess_fips(ds, opts.workers);
    std::cout << "Z_f: " << fips.z_f.str() << "\n";
    try {
        const ips::HipsState hips = ips::preprocess_hips(ds, opts.workers);
        std::cout << "Z_hf: " << hips.z_hf.str() << "\n";
    } catch (const ips::Error& e) {
        if (e.kind() != ips::ErrorKind::degenerate_space) {
            throw;
        }
        std::cout << "Z_hf: degenerate (every pattern has zero hyper-volume)\n";
    }
    return 0;
}

int run_sample(const CommonOpts& opts, const std::string& method_name, std::uint64_t k, int argc,
               char** argv) {
    ManifestWriter manifest(argc, argv);
    const ips::Method method = ips::parse_method(method_name);
    const LoadedDataset loaded = load_input(opts.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts);

    const ips::Sampler sampler = ips::make_sampler(method, loaded.data, opts.workers);
    manifest.phase("preprocess");
    const auto patterns = ips::sample_k(sampler, k, seed, opts.workers);
    manifest.phase("sample");

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.output.empty()) {
        file = open_output(opts.output);
        out = &file;
    }
    for (const auto& p : patterns) {
        *out << ips::serialize_pattern(p, loaded.data) << "\n";
    }
    manifest.phase("write");
    manifest.write(opts, seed, loaded.hash, {opts.output});
    return 0;
}

int run_enumerate(const CommonOpts& opts, std::uint64_t cap, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.input);
    manifest.phase("load");
    const ips::EnumeratedSpace space = ips::enumerate_all(loaded.data, cap, opts.workers);
    manifest.phase("enumerate");

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.output.empty()) {
        file = open_output(opts.output);
        out = &file;
    }
    int vol_exponent = 0;
    for (int e : loaded.data.scale_exponents) {
        vol_exponent += e;
    }
    *out << "bounds,freq,vol\n";
    for (std::uint64_t idx = 0; idx < space.count; ++idx) {
        const ips::IntervalPattern p = space.pattern(idx);
        *out << "\"[";
        for (std::size_t m = 0; m < p.bounds.size(); ++m) {
            if (m > 0) {
                *out << ',';
            }
            *out << '[' << ips::decimal_string(p.bounds[m].first, loaded.data.scale_exponents[m])
                 << ',' << ips::decimal_string(p.bounds[m].second, loaded.data.scale_exponents[m])
                 << ']';
        }
        *out << "]\"," << space.freqs[idx] << ','
             << ips::decimal_string(space.vol(idx), vol_exponent) << "\n";
    }
    manifest.phase("write");
    manifest.write(opts, 0, loaded.hash, {opts.output});
    return 0;
}

struct EvalOpts {
    CommonOpts common;
    std::string method = "fips";
    std::string methods_multi; // commands that default to several methods
    std::uint64_t k = 500;
    std::uint64_t reps = 10;
    std::uint64_t r_randomizations = 10;
    std::int64_t swaps = -1; // -1: default |G|
    std::string band;
    std::string threshold = "0.01";
    std::string measure = "freq";
    std::string thetas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
    double time_limit = 30.0;
};

ips::Measure parse_measure(const std::string& name) {
    if (name == "freq") {
        return ips::Measure::freq;
    }
    if (name == "volfreq") {
        return ips::Measure::vol_times_freq;
    }
    throw ips::Error(ips::ErrorKind::usage, "unknown measure '" + name + "' (freq or volfreq)");
}

int run_eval_curve(const EvalOpts& opts, ips::Measure measure, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const ips::Sampler sampler =
        ips::make_sampler(ips::parse_method(opts.method), loaded.data, opts.common.workers);
    manifest.phase("preprocess");

    std::vector<std::vector<BigInt>> curves;
    curves.reserve(opts.reps);
    for (std::uint64_t rep = 0; rep < opts.reps; ++rep) {
        const auto patterns =
            ips::sample_k(sampler, opts.k, ips::rep_seed(seed, rep), opts.common.workers);
        curves.push_back(ips::measure_curve(patterns, loaded.data, measure));
    }
    const std::vector<Rational> mean = ips::mean_curve(curves);
    manifest.phase("run");

    if (!opts.common.output.empty()) {
        std::ofstream out = open_output(opts.common.output);
        out << "position,mean_value\n";
        for (std::size_t i = 0; i < mean.size(); ++i) {
            out << i << ',' << rational_decimal(mean[i]) << "\n";
        }
    }
    manifest.phase("write");
    manifest.write(opts.common, seed, loaded.hash, {opts.common.output});

    json summary;
    summary["metric"] = measure == ips::Measure::freq ? "freq-curve" : "volfreq-curve";
    summary["method"] = opts.method;
    summary["k"] = opts.k;
    summary["reps"] = opts.reps;
    summary["seed"] = seed;
    summary["top"] = mean.empty() ? "0" : rational_decimal(mean.front());
    summary["bottom"] = mean.empty() ? "0" : rational_decimal(mean.back());
    if (!opts.common.output.empty()) {
        summary["output"] = opts.common.output;
    }
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int run_eval_tail(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const ips::Measure measure = parse_measure(opts.measure);
    const Rational threshold = parse_decimal_fraction(opts.threshold);
    const ips::Sampler sampler =
        ips::make_sampler(ips::parse_method(opts.method), loaded.data, opts.common.workers);
    manifest.phase("preprocess");

    Rational mean = 0;
    for (std::uint64_t rep = 0; rep < opts.reps; ++rep) {
        const auto patterns =
            ips::sample_k(sampler, opts.k, ips::rep_seed(seed, rep), opts.common.workers);
        mean += ips::tail_fraction(patterns, loaded.data, measure, threshold);
    }
    mean /= static_cast<int>(opts.reps);
    manifest.phase("run");
    manifest.write(opts.common, seed, loaded.hash, {});

    json summary;
    summary["metric"] = "tail";
    summary["method"] = opts.method;
    summary["measure"] = opts.measure;
    summary["threshold"] = opts.threshold;
    summary["k"] = opts.k;
    summary["reps"] = opts.reps;
    summary["seed"] = seed;
    summary["tail_fraction"] = rational_decimal(mean);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int run_eval_diversity(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const ips::Sampler sampler =
        ips::make_sampler(ips::parse_method(opts.method), loaded.data, opts.common.workers);
    const auto patterns = ips::sample_k(sampler, opts.k, seed, opts.common.workers);
    const Rational diversity = ips::diversity_eq_classes(patterns, loaded.data);
    manifest.phase("run");
    manifest.write(opts.common, seed, loaded.hash, {});

    json summary;
    summary["metric"] = "diversity";
    summary["method"] = opts.method;
    summary["k"] = opts.k;
    summary["seed"] = seed;
    summary["diversity"] = rational_decimal(diversity);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int run_eval_jaccard(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);

    std::vector<Rational> thetas;
    std::string cur;
    for (char c : opts.thetas + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                thetas.push_back(parse_decimal_fraction(cur));
                cur.clear();
            }
        } else {
            cur += c;
        }
    }

    const ips::Sampler sampler =
        ips::make_sampler(ips::parse_method(opts.method), loaded.data, opts.common.workers);
    const auto patterns = ips::sample_k(sampler, opts.k, seed, opts.common.workers);
    const auto cdf = ips::jaccard_cdf(patterns, loaded.data, thetas, opts.common.workers);
    manifest.phase("run");

    if (!opts.common.output.empty()) {
        std::ofstream out = open_output(opts.common.output);
        out << "theta,cdf\n";
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            out << rational_decimal(thetas[i]) << ',' << rational_decimal(cdf[i]) << "\n";
        }
    }
    manifest.phase("write");
    manifest.write(opts.common, seed, loaded.hash, {opts.common.output});

    json summary;
    summary["metric"] = "jaccard-cdf";
    summary["method"] = opts.method;
    summary["k"] = opts.k;
    summary["seed"] = seed;
    json points = json::object();
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        points[rational_decimal(thetas[i])] = rational_decimal(cdf[i]);
    }
    summary["cdf"] = std::move(points);
    std::cout << summary.dump(2) << "\n";
    return 0;
}

// Tag mixed into the seed so band-draw streams and randomization streams of
// the same repetition never coincide.
constexpr std::uint64_t kRandomizeTag = 0x52414e44u;

int run_eval_plausibility(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const auto [lo, hi] = parse_band(opts.band.empty() ? "0:1" : opts.band);
    const std::uint64_t swaps =
        opts.swaps >= 0 ? static_cast<std::uint64_t>(opts.swaps) : loaded.data.n_objects();
    const auto methods =
        parse_method_list(opts.methods_multi.empty() ? "fips,hips,random-cover" : opts.methods_multi);

    json values = json::object();
    bool any_limit = false;
    for (const ips::Method method : methods) {
        const ips::Sampler sampler = ips::make_sampler(method, loaded.data, opts.common.workers);
        Rational mean = 0;
        for (std::uint64_t rep = 0; rep < opts.reps; ++rep) {
            const std::uint64_t rseed = ips::rep_seed(seed, rep);
            const auto band = ips::rejection_sample_in_band(sampler, lo, hi, opts.k,
                                                            opts.time_limit, rseed);
            any_limit |= band.time_limit_hit;
            if (band.patterns.empty()) {
                throw ips::Error(ips::ErrorKind::time_limit,
                                 "no patterns in the frequency band within the time limit");
            }
            mean += ips::plausibility(band.patterns, loaded.data, opts.r_randomizations,
                                      ips::rep_seed(rseed, kRandomizeTag), swaps,
                                      opts.common.workers);
        }
        mean /= static_cast<int>(opts.reps);
        values[ips::method_name(method)] = rational_decimal(mean);
    }
    manifest.phase("run");
    manifest.write(opts.common, seed, loaded.hash, {});

    json summary;
    summary["metric"] = "plausibility";
    summary["band"] = opts.band.empty() ? "0:1" : opts.band;
    summary["k"] = opts.k;
    summary["reps"] = opts.reps;
    summary["R"] = opts.r_randomizations;
    summary["swaps_per_attribute"] = swaps;
    summary["seed"] = seed;
    summary["plausibility"] = std::move(values);
    std::cout << summary.dump(2) << "\n";
    return any_limit ? static_cast<int>(ips::ErrorKind::time_limit) : 0;
}

int run_eval_draws(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const auto [lo, hi] = parse_band(opts.band.empty() ? "0.30:0.45" : opts.band);
    const auto methods =
        parse_method_list(opts.methods_multi.empty() ? "fips,hips,random-cover" : opts.methods_multi);

    json values = json::object();
    bool any_limit = false;
    for (const ips::Method method : methods) {
        const ips::Sampler sampler = ips::make_sampler(method, loaded.data, opts.common.workers);
        Rational mean_draws = 0;
        for (std::uint64_t rep = 0; rep < opts.reps; ++rep) {
            const auto band = ips::rejection_sample_in_band(sampler, lo, hi, opts.k,
                                                            opts.time_limit,
                                                            ips::rep_seed(seed, rep));
            any_limit |= band.time_limit_hit;
            mean_draws += band.draws_used;
        }
        mean_draws /= static_cast<int>(opts.reps);
        values[ips::method_name(method)] = rational_decimal(mean_draws, 2);
    }
    manifest.phase("run");
    manifest.write(opts.common, seed, loaded.hash, {});

    json summary;
    summary["metric"] = "draws-in-band";
    summary["band"] = opts.band.empty() ? "0.30:0.45" : opts.band;
    summary["k"] = opts.k;
    summary["reps"] = opts.reps;
    summary["seed"] = seed;
    summary["time_limit_hit"] = any_limit;
    summary["mean_draws"] = std::move(values);
    std::cout << summary.dump(2) << "\n";
    return any_limit ? static_cast<int>(ips::ErrorKind::time_limit) : 0;
}

int run_eval_timing(const EvalOpts& opts, int argc, char** argv) {
    ManifestWriter manifest(argc, argv);
    const LoadedDataset loaded = load_input(opts.common.input);
    manifest.phase("load");
    const std::uint64_t seed = resolve_seed(opts.common);
    const ips::TimingResult timing =
        ips::timing_run(ips::parse_method(opts.method), loaded.data, opts.k, seed);
    manifest.phase("run");

    if (!opts.common.output.empty()) {
        std::ofstream out = open_output(opts.common.output);
        out << "draw_index,wall_us\n";
        char buf[32];
        for (std::size_t i = 0; i < timing.per_draw_us.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.3f", timing.per_draw_us[i]);
            out << i << ',' << buf << "\n";
        }
    }
    manifest.phase("write");
    manifest.write(opts.common, seed, loaded.hash, {opts.common.output});

    std::vector<double> sorted = timing.per_draw_us;
    std::sort(sorted.begin(), sorted.end());
    double total = 0;
    for (double t : sorted) {
        total += t;
    }
    json summary;
    summary["metric"] = "timing";
    summary["method"] = opts.method;
    summary["k"] = opts.k;
    summary["seed"] = seed;
    summary["preprocess_seconds"] = timing.preprocess_seconds;
    summary["mean_us"] = sorted.empty() ? 0.0 : total / static_cast<double>(sorted.size());
    summary["p50_us"] = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
    summary["p95_us"] = sorted.empty() ? 0.0 : sorted[sorted.size() * 95 / 100];
    std::cout << summary.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval pattern sampling toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ips::kVersion);

    // stats
    CommonOpts stats_opts;
    CLI::App* stats = app.add_subcommand("stats", "dataset characteristics and normalization sums");
    add_common(stats, stats_opts);

    // sample
    CommonOpts sample_opts;
    std::string sample_method = "fips";
    std::uint64_t sample_k = 500;
    CLI::App* sample = app.add_subcommand("sample", "draw interval patterns");
    add_common(sample, sample_opts);
    sample->add_option("--method", sample_method, "fips | hips | random-cover | uniform-naive");
    sample->add_option("--k", sample_k, "number of draws (default 500)");

    // enumerate
    CommonOpts enum_opts;
    std::uint64_t enum_cap = 10'000'000;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list the whole pattern space");
    add_common(enumerate, enum_opts);
    enumerate->add_option("--cap", enum_cap, "maximum number of patterns (default 1e7)");

    // eval with nested metrics
    CLI::App* eval = app.add_subcommand("eval", "evaluation metrics");
    eval->require_subcommand(1);
    EvalOpts ev;
    auto add_eval_common = [&](CLI::App* cmd, bool multi_method) {
        add_common(cmd, ev.common);
        if (multi_method) {
            cmd->add_option("--method", ev.methods_multi,
                            "comma-separated methods (default fips,hips,random-cover)");
        } else {
            cmd->add_option("--method", ev.method, "fips | hips | random-cover | uniform-naive");
        }
        cmd->add_option("--k", ev.k, "patterns per repetition (default 500)");
        cmd->add_option("--reps", ev.reps, "repetitions averaged (default 10)");
    };
    CLI::App* freq_curve = eval->add_subcommand("freq-curve", "mean sorted frequency curve");
    add_eval_common(freq_curve, false);
    CLI::App* volfreq_curve = eval->add_subcommand("volfreq-curve", "mean sorted vol x freq curve");
    add_eval_common(volfreq_curve, false);
    CLI::App* tail = eval->add_subcommand("tail", "fraction of patterns in the low-measure tail");
    add_eval_common(tail, false);
    tail->add_option("--threshold", ev.threshold, "relative threshold (default 0.01)");
    tail->add_option("--measure", ev.measure, "freq | volfreq (default freq)");
    CLI::App* diversity = eval->add_subcommand("diversity", "distinct cover sets / k");
    add_eval_common(diversity, false);
    CLI::App* jaccard = eval->add_subcommand("jaccard-cdf", "CDF of pairwise cover Jaccard");
    add_eval_common(jaccard, false);
    jaccard->add_option("--thetas", ev.thetas, "comma-separated thresholds in [0,1]");
    CLI::App* plaus = eval->add_subcommand("plausibility", "frequency drop under swap randomization");
    add_eval_common(plaus, true);
    plaus->add_option("--R", ev.r_randomizations, "randomized datasets (default 10)");
    plaus->add_option("--swaps", ev.swaps, "swaps per attribute (default |G|)");
    plaus->add_option("--band", ev.band, "relative frequency window lo:hi (default 0:1)");
    plaus->add_option("--time-limit", ev.time_limit, "seconds per repetition (default 30)");
    CLI::App* draws = eval->add_subcommand("draws-in-band", "draws needed for k in-band patterns");
    add_eval_common(draws, true);
    draws->add_option("--band", ev.band, "relative frequency band lo:hi (default 0.30:0.45)");
    draws->add_option("--time-limit", ev.time_limit, "seconds per repetition (default 30)");
    CLI::App* timing = eval->add_subcommand("timing", "preprocessing and per-draw wall times");
    add_eval_common(timing, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ips::ErrorKind::usage);
    }

    try {
        if (stats->parsed()) {
            return run_stats(stats_opts);
        }
        if (sample->parsed()) {
            return run_sample(sample_opts, sample_method, sample_k, argc, argv);
        }
        if (enumerate->parsed()) {
            return run_enumerate(enum_opts, enum_cap, argc, argv);
        }
        if (eval->parsed()) {
            if (freq_curve->parsed()) {
                return run_eval_curve(ev, ips::Measure::freq, argc, argv);
            }
            if (volfreq_curve->parsed()) {
                return run_eval_curve(ev, ips::Measure::vol_times_freq, argc, argv);
            }
            if (tail->parsed()) {
                return run_eval_tail(ev, argc, argv);
            }
            if (diversity->parsed()) {
                return run_eval_diversity(ev, argc, argv);
            }
            if (jaccard->parsed()) {
                return run_eval_jaccard(ev, argc, argv);
            }
            if (plaus->parsed()) {
                return run_eval_plausibility(ev, argc, argv);
            }
            if (draws->parsed()) {
                return run_eval_draws(ev, argc, argv);
            }
            if (timing->parsed()) {
                return run_eval_timing(ev, argc, argv);
            }
        }
        return static_cast<int>(ips::ErrorKind::usage);
    } catch (const ips::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ips::ErrorKind::data);
    }
}
