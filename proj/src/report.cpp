#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ngrank/sweep.hpp"

namespace ngrank {

namespace {

void write_jsonl(const SweepReport& r, std::ostream& out) {
    using nlohmann::json;

    json checks = json::array();
    for (auto id : r.checks) checks.push_back(std::string(to_string(id)));
    json applicable = json::object();
    for (const auto& [id, c] : r.applicable_count) applicable[std::string(to_string(id))] = c;
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"line", s.line}, {"message", s.message}});

    json summary = {
        {"type", "summary"},
        {"source", r.source},
        {"mode", std::string(to_string(r.mode))},
        {"prime", r.prime ? json(*r.prime) : json(nullptr)},
        {"checks", checks},
        {"n_min", r.n_min},
        {"n_max", r.n_max},
        {"graph_count", r.graph_count},
        {"violations", r.violations.size()},
        {"applicable", applicable},
        {"reverified", r.reverified},
        {"skipped", skipped},
        {"seconds", r.seconds},
    };
    out << summary.dump() << '\n';

    for (const auto& v : r.violations)
        out << json{{"type", "violation"},
                    {"graph6", v.graph6},
                    {"theorem", std::string(to_string(v.theorem_id))},
                    {"detail", v.detail}}
                   .dump()
            << '\n';
    for (const auto& [id, inv] : r.equality_inventory)
        out << json{{"type", "equality"},
                    {"theorem", std::string(to_string(id))},
                    {"count", inv.count},
                    {"truncated", inv.truncated},
                    {"graphs", inv.graphs}}
                   .dump()
            << '\n';
    for (const auto& [key, count] : r.rank_pair_histogram) {
        const auto& [n, fg, fgbar] = key;
        out << json{{"type", "histogram"}, {"n", n}, {"f_g", fg}, {"f_gbar", fgbar}, {"count", count}}.dump()
            << '\n';
    }
}

void write_csv(const SweepReport& r, std::ostream& out) {
    out << "n,f_g,f_gbar,count\n";
    for (const auto& [key, count] : r.rank_pair_histogram) {
        const auto& [n, fg, fgbar] = key;
        out << n << ',' << fg << ',' << fgbar << ',' << count << '\n';
    }
}

}  // namespace

void write_report(const SweepReport& report, ReportFormat format, std::ostream& out) {
    if (format == ReportFormat::Jsonl)
        write_jsonl(report, out);
    else
        write_csv(report, out);
    if (!out) throw std::runtime_error("write_report: output stream failed");
}

void write_report(const SweepReport& report, ReportFormat format, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_report: cannot open " + path.string() + " for writing");
    write_report(report, format, out);
    out.close();
    if (!out) throw std::runtime_error("write_report: failed writing " + path.string());
}

}  // namespace ngrank
