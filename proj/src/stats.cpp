#include "vcbr/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace vcbr {

void StatsReport::merge(const StatsReport& other) {
    num_branches += other.num_branches;
    for (std::size_t i = 0; i < reductions.size(); i++) {
        reductions[i].time_us += other.reductions[i].time_us;
        reductions[i].count += other.reductions[i].count;
        reductions[i].effective_calls += other.reductions[i].effective_calls;
        reductions[i].total_calls += other.reductions[i].total_calls;
    }
    for (std::size_t i = 0; i < effective_lb.size(); i++) effective_lb[i] += other.effective_lb[i];
    clique_lb_time_us += other.clique_lb_time_us;
    cycle_lb_time_us += other.cycle_lb_time_us;
    num_leftcuts += other.num_leftcuts;
}

namespace {

// Key order of the printed block. The reduction order here is fixed by the
// report format, not by the reduce loop.
constexpr std::array<const char*, 9> kPrintNames = {
    "deg1", "dom", "fold2", "lp", "twin", "desk", "unconfined", "funnel", "packing"};
constexpr std::array<int, 9> kPrintIndex = {
    static_cast<int>(ReductionKind::Deg1),       static_cast<int>(ReductionKind::Dominance),
    static_cast<int>(ReductionKind::Fold2),      static_cast<int>(ReductionKind::Lp),
    static_cast<int>(ReductionKind::Twin),       static_cast<int>(ReductionKind::Desk),
    static_cast<int>(ReductionKind::Unconfined), static_cast<int>(ReductionKind::Funnel),
    kReductionKinds};

void emit_count(std::string& out, const std::string& key, std::int64_t value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-20s\t%16lld\n", key.c_str(),
                  static_cast<long long>(value));
    out += buf;
}

void emit_time_us(std::string& out, const std::string& key, std::int64_t us) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-20s\t%10.3f\n", key.c_str(),
                  static_cast<double>(us) / 1000.0);
    out += buf;
}

void emit_time_ms(std::string& out, const std::string& key, std::int64_t ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-20s\t%10.3f\n", key.c_str(),
                  static_cast<double>(ms) / 1000.0);
    out += buf;
}

}  // namespace

std::string render_stats(const StatsReport& r) {
    std::string out;
    emit_count(out, "num_vertices", r.num_vertices);
    emit_count(out, "num_edges", r.num_edges);
    emit_count(out, "value", r.value);
    emit_time_ms(out, "runtime", r.runtime_ms);
    emit_count(out, "num_branches", r.num_branches);
    out += "Reduction Times (ms):\n";
    for (int i = 0; i < 9; i++)
        emit_time_us(out, std::string(kPrintNames[i]) + "Time", r.reductions[kPrintIndex[i]].time_us);
    out += "Vertices Reduced:\n";
    for (int i = 0; i < 9; i++)
        emit_count(out, std::string(kPrintNames[i]) + "Count", r.reductions[kPrintIndex[i]].count);
    out += "Effective Reduction Calls:\n";
    for (int i = 0; i < 9; i++)
        emit_count(out, std::string(kPrintNames[i]) + "Calls",
                   r.reductions[kPrintIndex[i]].effective_calls);
    out += "Total Reduction Calls:\n";
    for (int i = 0; i < 9; i++)
        emit_count(out, std::string(kPrintNames[i]) + "AllCalls",
                   r.reductions[kPrintIndex[i]].total_calls);
    out += "Effective Lower Bounds:\n";
    emit_count(out, "trivialLBCount", r.effective_lb[static_cast<int>(LowerBoundKind::Trivial)]);
    emit_count(out, "cliqueLBCount", r.effective_lb[static_cast<int>(LowerBoundKind::Clique)]);
    emit_count(out, "lpLBCount", r.effective_lb[static_cast<int>(LowerBoundKind::Lp)]);
    emit_count(out, "cycleLBCount", r.effective_lb[static_cast<int>(LowerBoundKind::Cycle)]);
    out += "Lower Bound Times (ms):\n";
    emit_time_us(out, "cliqueLBTime", r.clique_lb_time_us);
    emit_time_us(out, "cycleLBTime", r.cycle_lb_time_us);
    emit_count(out, "num_leftcuts", r.num_leftcuts);
    emit_count(out, "root_lb", r.root_lb);
    return out;
}

namespace {

std::int64_t parse_ms_to_us(const std::string& text) {
    // "41.760" -> 41760; the format always carries three decimals.
    auto dot = text.find('.');
    if (dot == std::string::npos || text.size() - dot - 1 != 3)
        throw std::runtime_error("stats parse: malformed time '" + text + "'");
    std::int64_t whole = std::stoll(text.substr(0, dot));
    std::int64_t frac = std::stoll(text.substr(dot + 1));
    return whole * 1000 + frac;
}

}  // namespace

StatsReport parse_stats(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;  // section header
        std::string key = line.substr(0, tab);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        std::string value = line.substr(tab + 1);
        value.erase(0, value.find_first_not_of(' '));
        fields[key] = value;
    }
    auto count = [&](const std::string& key) {
        auto it = fields.find(key);
        if (it == fields.end()) throw std::runtime_error("stats parse: missing " + key);
        return std::stoll(it->second);
    };
    auto time_us = [&](const std::string& key) {
        auto it = fields.find(key);
        if (it == fields.end()) throw std::runtime_error("stats parse: missing " + key);
        return parse_ms_to_us(it->second);
    };
    StatsReport r;
    r.num_vertices = count("num_vertices");
    r.num_edges = count("num_edges");
    r.value = count("value");
    r.runtime_ms = parse_ms_to_us(fields.at("runtime"));
    r.num_branches = count("num_branches");
    for (int i = 0; i < 9; i++) {
        std::string base = kPrintNames[i];
        auto& slot = r.reductions[kPrintIndex[i]];
        slot.time_us = time_us(base + "Time");
        slot.count = count(base + "Count");
        slot.effective_calls = count(base + "Calls");
        slot.total_calls = count(base + "AllCalls");
    }
    r.effective_lb[static_cast<int>(LowerBoundKind::Trivial)] = count("trivialLBCount");
    r.effective_lb[static_cast<int>(LowerBoundKind::Clique)] = count("cliqueLBCount");
    r.effective_lb[static_cast<int>(LowerBoundKind::Lp)] = count("lpLBCount");
    r.effective_lb[static_cast<int>(LowerBoundKind::Cycle)] = count("cycleLBCount");
    r.clique_lb_time_us = time_us("cliqueLBTime");
    r.cycle_lb_time_us = time_us("cycleLBTime");
    r.num_leftcuts = count("num_leftcuts");
    r.root_lb = count("root_lb");
    return r;
}

namespace {

double median_of(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

// Zero entries are skipped: one zero would annihilate the whole product.
double geomean_of(const std::vector<double>& xs) {
    double log_sum = 0.0;
    int n = 0;
    for (double x : xs)
        if (x > 0.0) {
            log_sum += std::log(x);
            n++;
        }
    return n == 0 ? 0.0 : std::exp(log_sum / n);
}

}  // namespace

std::vector<EffRow> efficiency_table(const std::vector<StatsReport>& reports) {
    if (reports.empty()) throw std::runtime_error("efficiency_table: no reports");
    std::vector<EffRow> rows;
    for (int i = 0; i < 9; i++) {
        EffRow row;
        row.reduction = kPrintNames[i];
        std::vector<double> ratios, percents;
        for (const auto& rep : reports) {
            const auto& slot = rep.reductions[kPrintIndex[i]];
            if (slot.count > 0)
                ratios.push_back(static_cast<double>(slot.time_us) /
                                 static_cast<double>(slot.count));
            std::int64_t total = 0;
            for (const auto& red : rep.reductions) total += red.count;
            if (total > 0)
                percents.push_back(100.0 * static_cast<double>(slot.count) /
                                   static_cast<double>(total));
        }
        if (!ratios.empty()) {
            row.usec_per_vertex_median = median_of(ratios);
            row.usec_per_vertex_geomean = geomean_of(ratios);
        }
        if (!percents.empty()) {
            row.percent_median = median_of(percents);
            row.percent_geomean = geomean_of(percents);
        }
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const EffRow& a, const EffRow& b) {
        return a.percent_geomean > b.percent_geomean;
    });
    return rows;
}

std::string render_efficiency_table(const std::vector<EffRow>& rows) {
    std::string out = "reduction     usec/vertex med   geo     % reduced med   geo\n";
    char buf[128];
    for (const auto& row : rows) {
        if (row.usec_per_vertex_median)
            std::snprintf(buf, sizeof(buf), "%-12s %15.1f %7.1f %15.1f %7.1f\n",
                          row.reduction.c_str(), *row.usec_per_vertex_median,
                          *row.usec_per_vertex_geomean, row.percent_median, row.percent_geomean);
        else
            std::snprintf(buf, sizeof(buf), "%-12s %15s %7s %15.1f %7.1f\n", row.reduction.c_str(),
                          "-", "-", row.percent_median, row.percent_geomean);
        out += buf;
    }
    out += "(geometric means skip zero entries)\n";
    return out;
}

std::set<std::string> competitive_set(const RuntimeRow& runtimes,
                                      std::optional<double> min_override) {
    double min = min_override.value_or(std::numeric_limits<double>::infinity());
    for (const auto& [config, cell] : runtimes)
        if (!cell.timeout) min = std::min(min, cell.seconds);
    std::set<std::string> result;
    if (!std::isfinite(min)) return result;  // every trial timed out
    for (const auto& [config, cell] : runtimes)
        if (!cell.timeout && cell.seconds <= 2.0 * min) result.insert(config);
    return result;
}

bool globally_competitive(const RuntimeTable& table, const std::set<std::string>& collection) {
    for (const auto& [instance, row] : table) {
        auto comp = competitive_set(row);
        bool covered = false;
        for (const auto& c : collection)
            if (comp.count(c)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool goldilocks(const RuntimeRow& runtimes) {
    bool slow = false, fast = false;
    for (const auto& [config, cell] : runtimes) {
        if (cell.timeout || cell.seconds > 2.0) slow = true;
        if (!cell.timeout && cell.seconds < 600.0) fast = true;
    }
    return slow && fast;
}

}  // namespace vcbr
