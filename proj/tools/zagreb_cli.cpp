// Command-line front end: corpus sweeps, boundary-witness construction and
// bound-tightness statistics.  Exit codes: 0 clean, 1 violations, 2 bad usage
// or unreadable input.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zagreb/harness.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("short write to '" + path + "'");
}

struct VerifyArgs {
    std::string input;
    int enumerate_n = 0;
    bool connected_only = false;
    std::string checks = "all";
    int jobs = 1;
    std::string report_path;
    std::string csv_path;
};

int run_verify(const VerifyArgs& a, bool enumerate_given) {
    zagreb::SweepRequest request;
    if (!a.input.empty())
        request.source = a.input;
    else if (enumerate_given)
        request.source = zagreb::EnumerateSource{a.enumerate_n, a.connected_only};
    else
        throw std::invalid_argument("need --input or --enumerate");
    request.checks = zagreb::parse_check_list(a.checks);
    request.jobs = a.jobs;

    zagreb::SweepReport report = zagreb::run_sweep(request);
    std::string text = zagreb::render_report(report);
    if (a.report_path.empty())
        std::cout << text;
    else
        write_text(a.report_path, text);
    if (!a.csv_path.empty()) write_text(a.csv_path, zagreb::render_csv(report));
    return report.total_violations() == 0 ? 0 : 1;
}

int run_extremal(const std::string& kind, const std::vector<long long>& params,
                 const std::string& out_path) {
    zagreb::ExtremalKind k = zagreb::ExtremalKind::KK1;
    if (kind == "kkp1")
        k = zagreb::ExtremalKind::KK1;
    else if (kind == "kkp2")
        k = zagreb::ExtremalKind::KK2;
    else if (kind == "t3family")
        k = zagreb::ExtremalKind::T3Family;
    else
        throw std::invalid_argument("unknown kind '" + kind + "'");

    std::string text;
    for (const std::string& line : zagreb::emit_extremal(k, params))
        text += line + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
    return 0;
}

int run_stats(const std::string& input, const std::string& bound, int jobs,
              const std::string& csv_path) {
    if (bound != "t3")
        throw std::invalid_argument("unsupported bound '" + bound + "'");
    zagreb::SweepRequest request;
    request.source = input;
    request.checks = {zagreb::Check::T3};
    request.jobs = jobs;
    request.collect_tightness = true;

    zagreb::SweepReport report = zagreb::run_sweep(request);
    std::cout << zagreb::render_report(report);
    if (!csv_path.empty()) write_text(csv_path, zagreb::render_csv(report));
    return report.total_violations() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Zagreb-index Hamiltonicity bounds on small graphs"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "sweep a corpus and report violations");
    auto* in_opt = verify->add_option("--input", va.input, "graph6 file, one record per line");
    auto* enum_opt =
        verify->add_option("--enumerate", va.enumerate_n,
                           "all labeled graphs on N vertices (N <= 7)")
            ->check(CLI::Range(1, 7));
    in_opt->excludes(enum_opt);
    enum_opt->excludes(in_opt);
    verify->add_flag("--connected-only", va.connected_only, "skip disconnected graphs")
        ->needs(enum_opt);
    verify->add_option("--checks", va.checks,
                       "comma list of t1,t2,t3,ce,moon,jackson,sandwich,roundtrip,all");
    verify->add_option("--jobs", va.jobs, "worker threads; output is identical for any value")
        ->check(CLI::Range(1, 256));
    verify->add_option("--report", va.report_path, "write the report here instead of stdout");
    verify->add_option("--csv", va.csv_path, "also write machine-readable counters");

    std::string kind;
    std::vector<long long> params;
    std::string out_path;
    auto* extremal = app.add_subcommand("extremal", "emit boundary witnesses as graph6");
    extremal->add_option("--kind", kind, "kkp1, kkp2 or t3family")->required();
    extremal->add_option("--params", params, "kkp1/kkp2: a,b; t3family: n,beta,delta")
        ->required()
        ->delimiter(',');
    extremal->add_option("--out", out_path, "write witnesses here instead of stdout");

    std::string stats_input;
    std::string bound = "t3";
    int stats_jobs = 1;
    std::string stats_csv;
    auto* stats = app.add_subcommand("stats", "bound-tightness histogram over a corpus");
    stats->add_option("--input", stats_input, "graph6 file")->required();
    stats->add_option("--bound", bound, "which bound to profile (t3)");
    stats->add_option("--jobs", stats_jobs, "worker threads")->check(CLI::Range(1, 256));
    stats->add_option("--csv", stats_csv, "also write counters and histogram buckets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(va, enum_opt->count() > 0);
        if (extremal->parsed()) return run_extremal(kind, params, out_path);
        return run_stats(stats_input, bound, stats_jobs, stats_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
