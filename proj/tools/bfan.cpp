#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bfan/approx.hpp"
#include "bfan/families.hpp"
#include "bfan/influence.hpp"
#include "bfan/report.hpp"
#include "bfan/sharpness.hpp"
#include "bfan/truth_table_io.hpp"
#include "bfan/verify.hpp"

namespace {

using bfan::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
    std::string input;
    std::string out;
    std::string format = "json";
    uint64_t seed = 1;
    uint64_t samples = 100000;
    int n_max = 4;
    int d = 2;
    int threads = 1;
    bool timestamp = false;
};

void maybe_stamp(json& j, bool stamp) {
    if (!stamp) return;
    auto now = std::chrono::system_clock::now();
    j["generated_at"] = (uint64_t)std::chrono::duration_cast<std::chrono::seconds>(
                            now.time_since_epoch())
                            .count();
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(out, std::ios::binary);
    if (!os) bfan::fail(bfan::errc::io_error, "cannot open " + out + " for writing");
    os << text;
    if (!os) bfan::fail(bfan::errc::io_error, "write failed for " + out);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

// ---------------------------------------------------------------------- analyze

int cmd_analyze(const CommonOpts& opt) {
    bfan::BooleanFunction f = bfan::read_truth_table_file(opt.input);
    const int n = f.n();
    if (opt.d < 0 || opt.d > n) bfan::fail(bfan::errc::bad_degree, "--d must be in [0, n]");
    bfan::FourierTable t = bfan::fwht(f);

    json rep = bfan::report_envelope("analyze");
    maybe_stamp(rep, opt.timestamp);
    rep["input"] = opt.input;
    rep["n"] = n;
    rep["degree"] = bfan::degree(t);
    rep["mean"] = bfan::to_json(t.mean());
    rep["parseval"] = t.parseval_holds();
    rep["total_influence"] = bfan::to_json(bfan::total_influence(t));

    json levels = json::array();
    for (int r = 0; r <= n; ++r) {
        json row;
        row["level"] = r;
        row["weight"] = bfan::to_json(bfan::weight_exact(t, r));
        levels.push_back(std::move(row));
    }
    rep["level_weights"] = std::move(levels);

    json tails = json::array();
    for (int r = 0; r <= opt.d; ++r) {
        json row;
        row["d"] = r;
        row["weight_at_least"] = bfan::to_json(bfan::weight_at_least(t, r));
        tails.push_back(std::move(row));
    }
    rep["tail_weights"] = std::move(tails);

    json maxinf = json::array();
    for (int r = 1; r <= opt.d && r <= n; ++r) {
        auto [set, value] = bfan::max_influence(t, r);
        json row;
        row["d"] = r;
        row["set"] = bfan::to_json(set);
        row["value"] = bfan::to_json(value);
        row["report"] = bfan::to_json(bfan::influence_report(f, t, set));
        maxinf.push_back(std::move(row));
    }
    rep["max_influence"] = std::move(maxinf);

    if (opt.format == "text") {
        std::ostringstream os;
        os.precision(12);
        os << "n=" << n << " degree=" << rep["degree"].get<int>()
           << " mean=" << t.mean().to_string()
           << " totinf=" << bfan::total_influence(t).to_string() << "\n";
        for (int r = 1; r <= opt.d && r <= n; ++r) {
            auto [set, value] = bfan::max_influence(t, r);
            os << "maxinf d=" << r << " set=" << set.to_string() << " value=" << value.to_string()
               << "\n";
        }
        write_output(opt.out, os.str());
    } else if (opt.format == "json") {
        write_output(opt.out, rep.dump(2) + "\n");
    } else {
        bfan::fail(bfan::errc::bad_parameters, "analyze supports --format json|text");
    }
    return kExitOk;
}

// ----------------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, const CommonOpts& opt) {
    static const std::vector<std::string> known = {
        "main-theorem", "chain",      "kkl-identity", "fkn-identity",
        "hypercontractivity", "log-sobolev", "lattice",      "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        bfan::fail(bfan::errc::unknown_suite, "no suite named '" + suite + "'");

    std::vector<std::string> to_run;
    if (suite == "all")
        to_run.assign(known.begin(), known.end() - 1);
    else
        to_run.push_back(suite);

    json rep = bfan::report_envelope("verify");
    maybe_stamp(rep, opt.timestamp);
    rep["seed"] = opt.seed;
    rep["n_max"] = opt.n_max;
    json suites = json::array();
    bool all_ok = true;
    for (const auto& name : to_run) {
        bfan::SuiteResult r = bfan::run_suite(name, opt.n_max, opt.seed, opt.threads);
        std::cout << r.summary() << "\n";
        all_ok = all_ok && r.all_passed();
        suites.push_back(bfan::to_json(r));
    }
    rep["suites"] = std::move(suites);
    if (!opt.out.empty()) write_output(opt.out, rep.dump(2) + "\n");
    return all_ok ? kExitOk : kExitCheckFailure;
}

// --------------------------------------------------------------------- generate

int cmd_generate(const std::string& family, const CommonOpts& opt, int w, int index,
                 const std::string& bits, int k_override, bool ttb, int n) {
    bfan::BooleanFunction f;
    bool have_table = false;
    std::string packing_json;
    std::ostringstream stats;

    if (family == "dictator") {
        f = bfan::dictator(n, index);
        have_table = true;
    } else if (family == "parity") {
        uint64_t mask = n >= 64 ? ~0ULL : (1ULL << n) - 1;
        if (!bits.empty()) {
            mask = 0;
            for (int b : parse_int_list(bits)) {
                if (b < 1 || b > n) bfan::fail(bfan::errc::bad_parameters, "--bits out of [n]");
                mask |= 1ULL << (b - 1);
            }
        }
        f = bfan::parity(n, mask);
        have_table = true;
    } else if (family == "majority") {
        f = bfan::majority(n);
        have_table = true;
    } else if (family == "and") {
        f = bfan::and_function(n);
        have_table = true;
    } else if (family == "or") {
        f = bfan::or_function(n);
        have_table = true;
    } else if (family == "tribes") {
        if (w <= 0) bfan::fail(bfan::errc::bad_parameters, "tribes needs --w");
        f = bfan::tribes(n, w);
        have_table = true;
    } else if (family == "hypertribe") {
        std::optional<int> ko;
        if (k_override > 0) ko = k_override;
        bfan::TribeSpec spec = bfan::hypertribe(n, opt.d, opt.seed, ko);
        packing_json = bfan::packing_to_json(spec.packing);
        bfan::CoverageStats cov = bfan::coverage_stats(spec.packing);
        stats << "hypertribe n=" << n << " d=" << opt.d << " k=" << spec.k
              << (spec.k_rounded ? " (rounded)" : "") << " blocks=" << cov.block_count
              << " coverage=" << cov.covered_d_sets << "/" << cov.total_d_sets << " ("
              << cov.coverage_ratio << (cov.coverage_ratio >= 0.5 ? ", reaches 1/2" : ", below 1/2")
              << ") t*2^-k=" << cov.t_over_2k << "\n";
        if (n <= bfan::max_dimension()) {
            f = bfan::materialize(spec);
            have_table = true;
        }
    } else {
        bfan::fail(bfan::errc::bad_parameters, "unknown family '" + family + "'");
    }

    if (have_table) {
        if (opt.out.empty()) bfan::fail(bfan::errc::bad_parameters, "generate needs --out");
        bfan::write_truth_table_file(opt.out, f, ttb);
        stats << "wrote " << opt.out << " (n=" << f.n() << ", " << (ttb ? "TTB" : "TT1") << ")\n";
    }
    if (!packing_json.empty()) {
        std::string ppath = opt.out.empty() ? "packing.json" : opt.out + ".packing.json";
        write_output(ppath, packing_json + "\n");
        stats << "wrote " << ppath << "\n";
    }
    std::cout << stats.str();
    return kExitOk;
}

// -------------------------------------------------------------------- sharpness

int cmd_sharpness(const CommonOpts& opt, const std::string& n_list, uint64_t pairs,
                  uint64_t pair_samples) {
    std::vector<int> ns = parse_int_list(n_list);
    if (ns.empty()) bfan::fail(bfan::errc::bad_parameters, "--n-list must not be empty");
    for (int n : ns)
        if (n < 4) bfan::fail(bfan::errc::bad_parameters, "each n must be >= 4");

    bfan::SharpnessOptions sopts;
    sopts.samples = opt.samples;
    sopts.jinf_sets = pairs;
    sopts.jinf_samples = pair_samples;
    sopts.threads = opt.threads;

    std::ostringstream os;
    os << bfan::sharpness_csv_header() << "\n";
    for (int n : ns) {
        bfan::TribeSpec spec = bfan::hypertribe(n, opt.d, opt.seed);
        bfan::SharpnessRow row = bfan::sharpness_report(spec, opt.d, opt.seed, sopts);
        bfan::append_sharpness_csv(os, row);
    }
    write_output(opt.out, os.str());
    return kExitOk;
}

// ----------------------------------------------------------------------- approx

int cmd_approx(const CommonOpts& opt, bool lattice) {
    bfan::BooleanFunction f = bfan::read_truth_table_file(opt.input);
    const int n = f.n();
    if (opt.d < 0 || opt.d > n) bfan::fail(bfan::errc::bad_degree, "--d must be in [0, n]");
    bfan::ApproxMethod method =
        lattice ? bfan::ApproxMethod::lattice : bfan::ApproxMethod::automatic;

    json rep = bfan::report_envelope("approx");
    maybe_stamp(rep, opt.timestamp);
    rep["input"] = opt.input;
    rep["n"] = n;
    rep["d"] = opt.d;

    if (opt.d + 1 <= n && n >= 2) {
        bfan::FknReport fkn = bfan::fkn_report(f, opt.d, method);
        rep["approx"] = bfan::to_json(fkn.approx);
        rep["fkn"] = bfan::to_json(fkn);
    } else {
        rep["approx"] = bfan::to_json(bfan::nearest_low_degree(f, opt.d, method));
        rep["fkn"] = nullptr;
        rep["fkn_skipped"] = "needs d + 1 <= n";
    }
    write_output(opt.out, rep.dump(2) + "\n");
    return kExitOk;
}

int map_error(const bfan::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
    case bfan::errc::io_error:
    case bfan::errc::parse_error:
        return kExitIo;
    default:
        return kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact harmonic analysis of Boolean functions on the hypercube"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string suite = "all";
    std::string family;
    std::string n_list;
    std::string bits;
    int n = 0, w = 0, index = 1, k_override = 0;
    uint64_t pairs = 200, pair_samples = 2000;
    bool ttb = false, lattice = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Output path (stdout when omitted)");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--threads", opt.threads, "Worker threads");
        sub->add_flag("--timestamp", opt.timestamp, "Add a generated_at field to reports");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Spectrum and influence report for a table");
    analyze->add_option("--input", opt.input, "TT1/TTB truth table file")->required();
    analyze->add_option("--d", opt.d, "Max influence order to report");
    analyze->add_option("--format", opt.format, "json|text");
    add_common(analyze);

    CLI::App* verify = app.add_subcommand("verify", "Run a theorem-check battery");
    verify->add_option("--suite", suite,
                       "main-theorem|chain|kkl-identity|fkn-identity|hypercontractivity|"
                       "log-sobolev|lattice|all");
    verify->add_option("--n-max", opt.n_max, "Exhaustive sweep bound (<= 4)");
    add_common(verify);

    CLI::App* generate = app.add_subcommand("generate", "Write a named family to a table file");
    generate->add_option("family", family, "dictator|parity|majority|and|or|tribes|hypertribe")
        ->required();
    generate->add_option("--n", n, "Dimension")->required();
    generate->add_option("--w", w, "Tribe width (tribes)");
    generate->add_option("--index", index, "Dictator coordinate");
    generate->add_option("--bits", bits, "Parity support, e.g. 1,3,4");
    generate->add_option("--d", opt.d, "Hypertribe order");
    generate->add_option("--k", k_override, "Hypertribe block-size override");
    generate->add_flag("--ttb", ttb, "Write the binary TTB format");
    add_common(generate);

    CLI::App* sharp = app.add_subcommand("sharpness", "Hypertribe sharpness trend table (CSV)");
    sharp->add_option("--d", opt.d, "Hypertribe order");
    sharp->add_option("--n-list", n_list, "Comma-separated dimensions")->required();
    sharp->add_option("--samples", opt.samples, "Sampling draws per estimator");
    sharp->add_option("--pairs", pairs, "Sampled d-sets for the JInf maximum");
    sharp->add_option("--pair-samples", pair_samples, "Draws per sampled d-set");
    add_common(sharp);

    CLI::App* approx = app.add_subcommand("approx", "Nearest low-degree function + FKN ratios");
    approx->add_option("--input", opt.input, "TT1/TTB truth table file")->required();
    approx->add_option("--d", opt.d, "Target degree");
    approx->add_flag("--lattice", lattice, "Enable the lattice search (n <= 10)");
    add_common(approx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (verify->parsed()) return cmd_verify(suite, opt);
        if (generate->parsed())
            return cmd_generate(family, opt, w, index, bits, k_override, ttb, n);
        if (sharp->parsed()) return cmd_sharpness(opt, n_list, pairs, pair_samples);
        if (approx->parsed()) return cmd_approx(opt, lattice);
    } catch (const bfan::error& e) {
        return map_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
