#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <ranges>
#include <string>
#include <tuple>
#include <vector>

#include "ngrank/graph.hpp"
#include "ngrank/verifiers.hpp"

namespace ngrank {

/// Orders enumerated without the long-run flag.
inline constexpr std::size_t kLabeledCap = 7;
/// Absolute ceiling, reachable only with the long-run flag.
inline constexpr std::size_t kLabeledLongRunCap = 8;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Throws
/// std::invalid_argument when n = 0 or n is above the applicable cap.
std::uint64_t labeled_count(std::size_t n, bool allow_long_run = false);

/// Graph whose edge set is the bit set of mask, bit k being the k-th pair in
/// graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// All labeled graphs on n vertices, each exactly once, in edge-mask order.
inline auto enumerate_labeled(std::size_t n, bool allow_long_run = false) {
    const auto count = labeled_count(n, allow_long_run);
    return std::views::iota(std::uint64_t{0}, count) |
           std::views::transform([n](std::uint64_t mask) { return graph_from_edge_mask(n, mask); });
}

struct SweepSource {
    enum class Kind { Labeled, File };

    Kind kind = Kind::Labeled;
    std::size_t n = 0;
    std::filesystem::path path;
    bool allow_long_run = false;
    /// Skip malformed graph6 lines (recording them) instead of failing.
    bool lenient = false;

    static SweepSource labeled(std::size_t n, bool allow_long_run = false) {
        return {Kind::Labeled, n, {}, allow_long_run, false};
    }
    static SweepSource file(std::filesystem::path p, bool lenient = false) {
        return {Kind::File, 0, std::move(p), false, lenient};
    }

    std::string describe() const;
};

enum class SweepMode { Exact, ModularReverify };

std::string_view to_string(SweepMode m);
SweepMode parse_sweep_mode(std::string_view name);

struct SweepOptions {
    std::vector<TheoremId> checks{kAllTheorems.begin(), kAllTheorems.end()};
    SweepMode mode = SweepMode::Exact;
    /// 0 means: NGRANK_WORKERS if set, else hardware concurrency.
    std::size_t workers = 0;
    /// Modulus for ModularReverify; a fresh random 61-bit prime when unset.
    std::optional<std::uint64_t> prime;
    /// Graph6 strings kept per equality inventory; counts are always exact.
    std::size_t inventory_limit = 100000;
};

struct Violation {
    std::string graph6;
    TheoremId theorem_id;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct EqualityInventory {
    std::uint64_t count = 0;
    std::vector<std::string> graphs;
    bool truncated = false;

    friend bool operator==(const EqualityInventory&, const EqualityInventory&) = default;
};

struct SkippedLine {
    std::size_t line = 0;
    std::string message;
};

struct SweepReport {
    std::string source;
    SweepMode mode = SweepMode::Exact;
    std::optional<std::uint64_t> prime;
    std::vector<TheoremId> checks;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::uint64_t graph_count = 0;
    std::vector<Violation> violations;
    std::map<TheoremId, EqualityInventory> equality_inventory;
    std::map<TheoremId, std::uint64_t> applicable_count;
    /// (n, f_g, f_gbar) -> count.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::uint64_t> rank_pair_histogram;
    /// Graphs whose verdicts were recomputed exactly in ModularReverify mode.
    std::uint64_t reverified = 0;
    std::vector<SkippedLine> skipped;
    double seconds = 0.0;

    /// Appends other, which must cover graphs that come after this report's.
    void merge(const SweepReport& other, std::size_t inventory_limit);
};

/// Same graphs, violations, inventories, applicability counts and histogram.
/// Timing, mode, prime and reverification counts are not compared.
bool same_results(const SweepReport& a, const SweepReport& b);

/// Runs every requested check on every graph of the source.
///
/// In ModularReverify mode ranks come from one prime p, and a graph is
/// recomputed exactly when any applicable verdict shows an equality or a
/// violation. Mod-p rank never exceeds the exact rank, so violations and the
/// lower-bound and small-rank inventories match exact mode for every prime.
/// UpperTrivial equalities and the histogram can still be off when p divides a
/// minor that matters; for a random 61-bit prime that is vanishingly rare.
SweepReport sweep(const SweepSource& source, const SweepOptions& options = {});

/// Sweep over graphs already in memory, e.g. parsed from another source.
SweepReport sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options = {},
                         std::string description = "in-memory");

enum class ReportFormat { Jsonl, Csv };

/// JSONL: a summary record, then violation, equality and histogram records.
/// CSV: the histogram with columns n,f_g,f_gbar,count.
void write_report(const SweepReport& report, ReportFormat format, std::ostream& out);
/// Throws std::runtime_error when the file cannot be written.
void write_report(const SweepReport& report, ReportFormat format, const std::filesystem::path& path);

/// Worker count from NGRANK_WORKERS, else hardware concurrency (at least 1).
std::size_t default_workers();

}  // namespace ngrank
