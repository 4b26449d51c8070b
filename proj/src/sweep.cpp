#include "ngrank/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "ngrank/exact_rank.hpp"
#include "ngrank/graph6.hpp"

namespace ngrank {

std::uint64_t labeled_count(std::size_t n, bool allow_long_run) {
    if (n == 0) throw std::invalid_argument("enumerate_labeled: n must be at least 1");
    if (n > kLabeledLongRunCap || (n > kLabeledCap && !allow_long_run))
        throw std::invalid_argument("enumerate_labeled: n = " + std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(kLabeledCap) + "; pass the long-run flag to allow n = " +
                                    std::to_string(kLabeledLongRunCap));
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) g.add_edge(i, j);
    return g;
}

std::string SweepSource::describe() const {
    if (kind == Kind::Labeled) return "labeled(" + std::to_string(n) + ")";
    return "file(" + path.string() + ")";
}

std::string_view to_string(SweepMode m) {
    return m == SweepMode::Exact ? "exact" : "modular-with-boundary-reverify";
}

SweepMode parse_sweep_mode(std::string_view name) {
    if (name == "exact") return SweepMode::Exact;
    if (name == "modular-with-boundary-reverify" || name == "modular") return SweepMode::ModularReverify;
    throw std::invalid_argument("unknown sweep mode '" + std::string(name) + "'");
}

std::size_t default_workers() {
    if (const char* env = std::getenv("NGRANK_WORKERS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void SweepReport::merge(const SweepReport& other, std::size_t inventory_limit) {
    if (other.graph_count > 0) {
        n_min = graph_count == 0 ? other.n_min : std::min(n_min, other.n_min);
        n_max = graph_count == 0 ? other.n_max : std::max(n_max, other.n_max);
    }
    graph_count += other.graph_count;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [id, inv] : other.equality_inventory) {
        auto& mine = equality_inventory[id];
        mine.count += inv.count;
        for (const auto& g6 : inv.graphs) {
            if (mine.graphs.size() < inventory_limit)
                mine.graphs.push_back(g6);
            else
                mine.truncated = true;
        }
        mine.truncated = mine.truncated || inv.truncated;
    }
    for (const auto& [id, c] : other.applicable_count) applicable_count[id] += c;
    for (const auto& [key, c] : other.rank_pair_histogram) rank_pair_histogram[key] += c;
    reverified += other.reverified;
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
}

bool same_results(const SweepReport& a, const SweepReport& b) {
    return a.graph_count == b.graph_count && a.n_min == b.n_min && a.n_max == b.n_max &&
           a.violations == b.violations && a.equality_inventory == b.equality_inventory &&
           a.applicable_count == b.applicable_count && a.rank_pair_histogram == b.rank_pair_histogram;
}

namespace {

class GraphEvaluator {
public:
    GraphEvaluator(const SweepOptions& options, std::optional<Prime> prime)
        : options_(options), prime_(prime) {}

    void operator()(const Graph& g, SweepReport& out) const {
        GraphFacts facts{prime_ ? complement_rank_pair_mod_p(g, *prime_) : complement_rank_pair(g),
                         recognize_family(g)};
        std::vector<BoundVerdict> verdicts;
        verdicts.reserve(options_.checks.size());
        for (auto id : options_.checks) verdicts.push_back(verify(id, facts));

        if (prime_) {
            const bool boundary = std::any_of(verdicts.begin(), verdicts.end(), [](const BoundVerdict& v) {
                return v.applicable && (v.equality || v.is_violation());
            });
            if (boundary) {
                facts.ranks = complement_rank_pair(g);
                for (std::size_t k = 0; k < verdicts.size(); ++k) verdicts[k] = verify(options_.checks[k], facts);
                ++out.reverified;
            }
        }

        const auto n = g.order();
        out.n_min = out.graph_count == 0 ? n : std::min(out.n_min, n);
        out.n_max = out.graph_count == 0 ? n : std::max(out.n_max, n);
        ++out.graph_count;
        ++out.rank_pair_histogram[{n, facts.ranks.f_g, facts.ranks.f_gbar}];

        std::string g6;
        const auto label = [&]() -> const std::string& {
            if (g6.empty()) g6 = emit_graph6(g);
            return g6;
        };
        for (const auto& v : verdicts) {
            if (!v.applicable) continue;
            ++out.applicable_count[v.theorem_id];
            if (v.is_violation()) out.violations.push_back({label(), v.theorem_id, v.detail});
            if (v.equality) {
                auto& inv = out.equality_inventory[v.theorem_id];
                ++inv.count;
                if (inv.graphs.size() < options_.inventory_limit)
                    inv.graphs.push_back(label());
                else
                    inv.truncated = true;
            }
        }
    }

private:
    const SweepOptions& options_;
    std::optional<Prime> prime_;
};

std::optional<Prime> resolve_prime(const SweepOptions& options, SweepReport& report) {
    if (options.mode != SweepMode::ModularReverify) return std::nullopt;
    std::uint64_t p = 0;
    if (options.prime) {
        p = *options.prime;
    } else {
        std::mt19937_64 rng(std::random_device{}());
        p = random_prime_61(rng);
    }
    report.prime = p;
    return Prime(p);
}

// Splits [0, count) into contiguous chunks and evaluates them on a worker
// pool. Chunk reports are merged in index order, so the result does not depend
// on the number of workers.
SweepReport run_chunked(std::uint64_t count, const SweepOptions& options,
                        const std::function<void(std::uint64_t, SweepReport&)>& evaluate_index) {
    const auto workers = std::max<std::size_t>(1, options.workers ? options.workers : default_workers());
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, workers * 16));
    std::vector<SweepReport> partial(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&] {
        for (;;) {
            const auto c = next.fetch_add(1);
            if (c >= chunks) return;
            const auto begin = count * c / chunks;
            const auto end = count * (c + 1) / chunks;
            try {
                for (auto i = begin; i < end; ++i) evaluate_index(i, partial[c]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = chunks;
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < std::min<std::uint64_t>(workers, chunks); ++w) pool.emplace_back(work);
        work();
    }
    if (failure) std::rethrow_exception(failure);

    SweepReport total;
    for (const auto& p : partial) total.merge(p, options.inventory_limit);
    return total;
}

void finish(SweepReport& report, std::string source, const SweepOptions& options,
            std::optional<std::uint64_t> prime, std::chrono::steady_clock::time_point start) {
    report.source = std::move(source);
    report.mode = options.mode;
    report.prime = prime;
    report.checks = options.checks;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SweepReport sweep_graphs(const std::vector<Graph>& graphs, const SweepOptions& options, std::string description) {
    if (options.checks.empty()) throw std::invalid_argument("sweep: no checks requested");
    const auto start = std::chrono::steady_clock::now();
    SweepReport meta;
    const auto prime = resolve_prime(options, meta);
    const GraphEvaluator eval(options, prime);
    auto report = run_chunked(graphs.size(), options,
                              [&](std::uint64_t i, SweepReport& out) { eval(graphs[i], out); });
    finish(report, std::move(description), options, meta.prime, start);
    return report;
}

SweepReport sweep(const SweepSource& source, const SweepOptions& options) {
    if (options.checks.empty()) throw std::invalid_argument("sweep: no checks requested");
    if (source.kind == SweepSource::Kind::Labeled) {
        const auto start = std::chrono::steady_clock::now();
        const auto count = labeled_count(source.n, source.allow_long_run);
        SweepReport meta;
        const auto prime = resolve_prime(options, meta);
        const GraphEvaluator eval(options, prime);
        const auto n = source.n;
        auto report = run_chunked(count, options, [&](std::uint64_t mask, SweepReport& out) {
            eval(graph_from_edge_mask(n, mask), out);
        });
        finish(report, source.describe(), options, meta.prime, start);
        return report;
    }

    std::ifstream in(source.path);
    if (!in) throw std::runtime_error("sweep: cannot open " + source.path.string());
    std::vector<Graph> graphs;
    std::vector<SkippedLine> skipped;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto g = parse_graph6(line);
            if (g.order() == 0) throw std::invalid_argument("graphs of order 0 are not supported");
            graphs.push_back(std::move(g));
        } catch (const std::invalid_argument& e) {
            const std::string msg = source.path.string() + ":" + std::to_string(line_no) + ": " + e.what();
            if (!source.lenient) throw std::runtime_error(msg);
            skipped.push_back({line_no, msg});
        }
    }
    if (in.bad()) throw std::runtime_error("sweep: read error on " + source.path.string());
    auto report = sweep_graphs(graphs, options, source.describe());
    report.skipped = std::move(skipped);
    return report;
}

}  // namespace ngrank
