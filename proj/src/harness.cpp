#include "zagreb/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "zagreb/constructors.hpp"
#include "zagreb/inequalities.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/theorems.hpp"

namespace zagreb {

namespace {

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "t1", "t2", "t3", "ce_ham", "ce_trace", "moon", "jackson", "sandwich", "roundtrip"};

int check_index(Check c) { return static_cast<int>(c); }

}  // namespace

const char* check_name(Check c) { return kCheckNames[check_index(c)]; }

std::vector<Check> parse_check_list(const std::string& spec) {
    std::vector<bool> wanted(kCheckCount, false);
    std::stringstream ss(spec);
    std::string token;
    bool any = false;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty check name in list");
        any = true;
        if (token == "all") {
            std::fill(wanted.begin(), wanted.end(), true);
        } else if (token == "ce") {
            wanted[check_index(Check::CeHam)] = true;
            wanted[check_index(Check::CeTrace)] = true;
        } else {
            bool known = false;
            for (int i = 0; i < kCheckCount; ++i)
                if (token == kCheckNames[i]) {
                    wanted[i] = true;
                    known = true;
                }
            if (!known)
                throw std::invalid_argument("unknown check '" + token + "'");
        }
    }
    if (!any) throw std::invalid_argument("empty check list");
    std::vector<Check> out;
    for (int i = 0; i < kCheckCount; ++i)
        if (wanted[i]) out.push_back(static_cast<Check>(i));
    return out;
}

void merge_check_stats(CheckStats& into, const CheckStats& block) {
    into.applicable += block.applicable;
    into.condition_met += block.condition_met;
    into.violations += block.violations;
    for (const auto& w : block.witnesses) {
        if (into.witnesses.size() >= CheckStats::kWitnessCap) break;
        into.witnesses.push_back(w);
    }
}

std::uint64_t SweepReport::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& st : per_check) total += st.violations;
    return total;
}

namespace {

struct BlockResult {
    std::array<CheckStats, kCheckCount> stats;
    TightnessHistogram tightness;
    std::uint64_t scanned = 0;
    // First failure in this block, as (item index, message).
    std::optional<std::pair<std::uint64_t, std::string>> error;
};

void record_violation(CheckStats& st, const Graph& g, const std::string* record) {
    ++st.violations;
    if (st.witnesses.size() < CheckStats::kWitnessCap)
        st.witnesses.push_back(record ? *record : encode_graph6(g));
}

void add_tightness(TightnessHistogram& hist, long long m1, const Rational& bound) {
    ++hist.samples;
    const Rational ratio = Rational(m1) / bound;
    if (ratio == 1) {
        ++hist.exactly_one;
    } else if (ratio > 1) {
        ++hist.above_one;
    } else {
        BigInt idx = numerator(ratio) * 20 / denominator(ratio);
        hist.buckets[static_cast<int>(idx)] += 1;
    }
}

// `record` is the graph6 line for file sources (witnesses and round-trips
// reuse it verbatim); enumerated graphs encode on demand.
void evaluate_graph(const Graph& g, const std::string* record,
                    const std::vector<Check>& checks, bool collect_tightness,
                    BlockResult& acc) {
    ++acc.scanned;
    for (Check c : checks) {
        CheckStats& st = acc.stats[check_index(c)];
        switch (c) {
            case Check::T1: {
                TheoremVerdict v = check_theorem1(g);
                if (!v.applicable) break;
                ++st.applicable;
                if (v.condition_met) ++st.condition_met;
                if (!v.consistent) record_violation(st, g, record);
                break;
            }
            case Check::T2: {
                TheoremVerdict v = check_theorem2(g);
                if (!v.applicable) break;
                ++st.applicable;
                if (v.condition_met) ++st.condition_met;
                if (!v.consistent) record_violation(st, g, record);
                break;
            }
            case Check::T3: {
                if (degree_profile(g).delta < 1) break;  // bound needs delta >= 1
                Theorem3Outcome out = check_theorem3(g);
                ++st.applicable;
                if (out.verdict.condition_met) ++st.condition_met;
                if (!out.verdict.consistent) record_violation(st, g, record);
                if (collect_tightness)
                    add_tightness(acc.tightness, out.verdict.lhs_m1, out.verdict.rhs);
                break;
            }
            case Check::CeHam: {
                LemmaOutcome o = chvatal_erdos_hamiltonian(g);
                if (!o.applicable) break;
                ++st.applicable;
                if (o.condition) ++st.condition_met;
                if (!o.consistent) record_violation(st, g, record);
                break;
            }
            case Check::CeTrace: {
                LemmaOutcome o = chvatal_erdos_traceable(g);
                ++st.applicable;
                if (o.condition) ++st.condition_met;
                if (!o.consistent) record_violation(st, g, record);
                break;
            }
            case Check::Moon: {
                LemmaOutcome o = moon_moser_hamiltonian(g);
                if (!o.applicable) break;
                ++st.applicable;
                if (o.condition) ++st.condition_met;
                if (!o.consistent) record_violation(st, g, record);
                break;
            }
            case Check::Jackson: {
                if (g.order() > 16) break;  // outside the exact-cycle ceiling
                JacksonOutcome o = jackson_cycle_bound(g);
                if (!o.applicable) break;
                ++st.applicable;
                if (o.circumference == o.promised_length) ++st.condition_met;
                if (!o.consistent) record_violation(st, g, record);
                break;
            }
            case Check::Sandwich: {
                VertexSet witness = detail::lex_min_max_independent_set(g);
                DegreeSandwich dsw = degree_sandwich(g, witness);
                ++st.applicable;
                if (dsw.tight_lower && dsw.tight_upper) ++st.condition_met;
                if (!(dsw.lower <= dsw.e && dsw.e <= dsw.upper))
                    record_violation(st, g, record);
                break;
            }
            case Check::Roundtrip: {
                ++st.applicable;
                bool ok = record ? encode_graph6(g) == *record
                                 : decode_graph6(encode_graph6(g)) == g;
                if (ok)
                    ++st.condition_met;
                else
                    record_violation(st, g, record);
                break;
            }
        }
    }
}

constexpr std::string_view kFileHeader = ">>graph6<<";

// Loads graph6 records; a lone ">>graph6<<" first line is skipped, a prefix
// on the first record is stripped.  line_base reports how many physical
// lines precede record 0.
std::vector<std::string> load_records(const std::string& path, std::uint64_t& line_base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<std::string> records;
    std::string line;
    line_base = 0;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            first = false;
            if (line == kFileHeader) {
                line_base = 1;
                continue;
            }
            if (line.substr(0, kFileHeader.size()) == kFileHeader)
                line = line.substr(kFileHeader.size());
        }
        records.push_back(line);
    }
    return records;
}

template <typename WorkFn>
void run_blocks(std::uint64_t total, int jobs, std::vector<BlockResult>& results,
                WorkFn&& work) {
    if (jobs < 1) jobs = 1;
    if (static_cast<std::uint64_t>(jobs) > total && total > 0)
        jobs = static_cast<int>(total);
    if (total == 0) jobs = 1;
    results.resize(jobs);
    if (jobs == 1) {
        work(0, total, results[0]);
        return;
    }
    std::vector<std::thread> threads;
    const std::uint64_t chunk = total / jobs, extra = total % jobs;
    std::uint64_t begin = 0;
    for (int j = 0; j < jobs; ++j) {
        std::uint64_t size = chunk + (static_cast<std::uint64_t>(j) < extra ? 1 : 0);
        std::uint64_t end = begin + size;
        threads.emplace_back([&, begin, end, j] { work(begin, end, results[j]); });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

}  // namespace

SweepReport run_sweep(const SweepRequest& request) {
    if (request.checks.empty())
        throw std::invalid_argument("no checks requested");
    std::vector<Check> checks = request.checks;
    std::sort(checks.begin(), checks.end());
    checks.erase(std::unique(checks.begin(), checks.end()), checks.end());

    SweepReport report;
    report.checks = checks;

    std::vector<BlockResult> blocks;

    if (const auto* en = std::get_if<EnumerateSource>(&request.source)) {
        const std::uint64_t total = labeled_graph_count(en->n);  // validates n
        report.corpus_id = "enumerate n=" + std::to_string(en->n) +
                           (en->connected_only ? " connected" : " all");
        run_blocks(total, request.jobs, blocks,
                   [&](std::uint64_t lo, std::uint64_t hi, BlockResult& acc) {
                       for (std::uint64_t mask = lo; mask < hi; ++mask) {
                           try {
                               Graph g = graph_from_mask(en->n, mask);
                               if (en->connected_only && !is_connected(g)) continue;
                               evaluate_graph(g, nullptr, checks,
                                              request.collect_tightness, acc);
                           } catch (const std::exception& ex) {
                               acc.error = {mask, ex.what()};
                               return;
                           }
                       }
                   });
        for (const auto& b : blocks)
            if (b.error)
                throw std::runtime_error("enumeration mask " +
                                         std::to_string(b.error->first) + ": " +
                                         b.error->second);
    } else {
        const std::string& path = std::get<std::string>(request.source);
        report.corpus_id = path;
        std::uint64_t line_base = 0;
        std::vector<std::string> records = load_records(path, line_base);
        run_blocks(records.size(), request.jobs, blocks,
                   [&](std::uint64_t lo, std::uint64_t hi, BlockResult& acc) {
                       for (std::uint64_t i = lo; i < hi; ++i) {
                           try {
                               Graph g = decode_graph6(records[i]);
                               evaluate_graph(g, &records[i], checks,
                                              request.collect_tightness, acc);
                           } catch (const std::exception& ex) {
                               acc.error = {i, ex.what()};
                               return;
                           }
                       }
                   });
        std::optional<std::pair<std::uint64_t, std::string>> first_error;
        for (const auto& b : blocks)
            if (b.error && (!first_error || b.error->first < first_error->first))
                first_error = b.error;
        if (first_error)
            throw std::runtime_error(path + " line " +
                                     std::to_string(first_error->first + 1 + line_base) +
                                     ": " + first_error->second);
    }

    // Ordered reduction keeps the result independent of the worker count.
    for (const auto& b : blocks) {
        report.graphs_scanned += b.scanned;
        for (int i = 0; i < kCheckCount; ++i)
            merge_check_stats(report.per_check[i], b.stats[i]);
    }
    if (request.collect_tightness) {
        TightnessHistogram hist;
        for (const auto& b : blocks) {
            for (int i = 0; i < 20; ++i) hist.buckets[i] += b.tightness.buckets[i];
            hist.exactly_one += b.tightness.exactly_one;
            hist.above_one += b.tightness.above_one;
            hist.samples += b.tightness.samples;
        }
        report.tightness = hist;
    }
    return report;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string bucket_label(int i) {
    // i in 0..19 -> "[0.05,0.10)" style labels; exact two-decimal endpoints.
    auto endpoint = [](int twentieths) {
        int hundredths = twentieths * 5;
        std::string s = std::to_string(hundredths / 100) + ".";
        s += static_cast<char>('0' + (hundredths % 100) / 10);
        s += static_cast<char>('0' + hundredths % 10);
        return s;
    };
    return "[" + endpoint(i) + "," + endpoint(i + 1) + ")";
}

}  // namespace

std::string render_report(const SweepReport& report) {
    std::string out;
    out += "== verification sweep ==\n";
    out += "corpus: " + report.corpus_id + "\n";
    out += "graphs_scanned: " + std::to_string(report.graphs_scanned) + "\n";
    out += "\n";
    out += pad("check", 11) + pad("applicable", 12) + pad("condition_met", 15) +
           "violations\n";
    for (Check c : report.checks) {
        const CheckStats& st = report.per_check[check_index(c)];
        out += pad(check_name(c), 11) + pad(std::to_string(st.applicable), 12) +
               pad(std::to_string(st.condition_met), 15) +
               std::to_string(st.violations) + "\n";
    }
    for (Check c : report.checks) {
        const CheckStats& st = report.per_check[check_index(c)];
        if (st.violations == 0) continue;
        out += "\nviolations[" + std::string(check_name(c)) + "] (first " +
               std::to_string(st.witnesses.size()) + " of " +
               std::to_string(st.violations) + "):\n";
        for (const auto& w : st.witnesses) out += "  " + w + "\n";
    }
    if (report.tightness) {
        const TightnessHistogram& h = *report.tightness;
        out += "\n== t3 tightness (m1 / bound) ==\n";
        out += "samples: " + std::to_string(h.samples) + "\n";
        out += pad("bucket", 14) + "count\n";
        for (int i = 0; i < 20; ++i)
            out += pad(bucket_label(i), 14) + std::to_string(h.buckets[i]) + "\n";
        out += pad("=1", 14) + std::to_string(h.exactly_one) + "\n";
        out += pad(">1", 14) + std::to_string(h.above_one) + "\n";
    }
    out += "\nresult: ";
    out += report.total_violations() == 0 ? "PASS" : "FAIL";
    out += "\n";
    return out;
}

std::string render_csv(const SweepReport& report) {
    std::string out = "check,applicable,condition_met,violations\n";
    for (Check c : report.checks) {
        const CheckStats& st = report.per_check[check_index(c)];
        out += std::string(check_name(c)) + "," + std::to_string(st.applicable) + "," +
               std::to_string(st.condition_met) + "," + std::to_string(st.violations) +
               "\n";
    }
    if (report.tightness) {
        const TightnessHistogram& h = *report.tightness;
        out += "bucket,count\n";
        for (int i = 0; i < 20; ++i)
            out += bucket_label(i) + "," + std::to_string(h.buckets[i]) + "\n";
        out += "=1," + std::to_string(h.exactly_one) + "\n";
        out += ">1," + std::to_string(h.above_one) + "\n";
    }
    return out;
}

std::vector<std::string> emit_extremal(ExtremalKind kind,
                                       const std::vector<long long>& params) {
    auto want = [&](std::size_t count, const char* shape) {
        if (params.size() != count)
            throw std::invalid_argument(std::string("expected params ") + shape);
        for (long long p : params)
            if (p < 0 || p > 1000)
                throw std::invalid_argument("parameter out of range [0, 1000]");
    };
    Graph g(1);
    switch (kind) {
        case ExtremalKind::KK1:
            want(2, "a,b with b = a + 1");
            if (params[1] != params[0] + 1)
                throw std::invalid_argument("kkp1 needs b = a + 1");
            g = complete_bipartite(static_cast<int>(params[0]),
                                   static_cast<int>(params[1]));
            break;
        case ExtremalKind::KK2:
            want(2, "a,b with b = a + 2");
            if (params[1] != params[0] + 2)
                throw std::invalid_argument("kkp2 needs b = a + 2");
            g = complete_bipartite(static_cast<int>(params[0]),
                                   static_cast<int>(params[1]));
            break;
        case ExtremalKind::T3Family:
            want(3, "n,beta,delta");
            g = t3_equality_graph({static_cast<int>(params[0]),
                                   static_cast<int>(params[1]),
                                   static_cast<int>(params[2])});
            break;
    }
    return {encode_graph6(g)};
}

}  // namespace zagreb
