#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

// Sweep checks, in fixed report order.
enum class Check { T1, T2, T3, CeHam, CeTrace, Moon, Jackson, Sandwich, Roundtrip };
inline constexpr int kCheckCount = 9;

const char* check_name(Check c);

// Comma-separated list of check names; "ce" expands to ce_ham + ce_trace and
// "all" to every check.  Duplicates collapse, order is canonicalized.
std::vector<Check> parse_check_list(const std::string& spec);

struct CheckStats {
    static constexpr std::size_t kWitnessCap = 100;
    std::uint64_t applicable = 0;
    std::uint64_t condition_met = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> witnesses;  // graph6 of violating graphs, capped
};

// Orders blocks matter: witnesses concatenate in input order and stay capped.
void merge_check_stats(CheckStats& into, const CheckStats& block);

// m1 / t3_bound over graphs with minimum degree >= 1, bucketed exactly:
// twenty buckets [i/20, (i+1)/20) plus dedicated equality and violation bins.
struct TightnessHistogram {
    std::array<std::uint64_t, 20> buckets{};
    std::uint64_t exactly_one = 0;
    std::uint64_t above_one = 0;  // nonzero would witness a failed bound
    std::uint64_t samples = 0;
};

struct EnumerateSource {
    int n = 0;
    bool connected_only = false;
};

struct SweepRequest {
    // Either an internal labeled enumeration (n <= 7) or a graph6 file path.
    std::variant<EnumerateSource, std::string> source;
    std::vector<Check> checks;
    int jobs = 1;
    bool collect_tightness = false;
};

struct SweepReport {
    std::string corpus_id;
    std::vector<Check> checks;
    std::uint64_t graphs_scanned = 0;
    std::array<CheckStats, kCheckCount> per_check;  // indexed by Check value
    std::optional<TightnessHistogram> tightness;

    std::uint64_t total_violations() const;
};

// Runs every requested check over every graph in the source.  Results are
// identical for any worker count: the input splits into contiguous blocks
// whose partial results merge back in input order.  Violations never abort
// the sweep; malformed graph6 records do, with their line number.
SweepReport run_sweep(const SweepRequest& request);

// Deterministic renderings: no timestamps, no floats, no worker counts, so
// equal reports are byte-equal.
std::string render_report(const SweepReport& report);
std::string render_csv(const SweepReport& report);

enum class ExtremalKind { KK1, KK2, T3Family };

// graph6 lines for boundary instances: K_{a,a+1} (params {a, b}), K_{a,a+2}
// (params {a, b}), or the t3 equality family (params {n, beta, delta}).
std::vector<std::string> emit_extremal(ExtremalKind kind,
                                       const std::vector<long long>& params);

}  // namespace zagreb
