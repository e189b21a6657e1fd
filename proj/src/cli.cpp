#include "vcbr/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "vcbr/generators.hpp"
#include "vcbr/profiler.hpp"
#include "vcbr/solver.hpp"
#include "vcbr/stats.hpp"

namespace vcbr {

VerifyResult verify_solution(const Graph& g, std::string_view bits) {
    int max_label = 0;
    for (int v = 0; v < g.num_vertices(); v++) max_label = std::max(max_label, g.label(v));
    if (static_cast<int>(bits.size()) != max_label + 1)
        throw std::runtime_error("verify: solution length does not cover the label range");
    std::vector<int> vertex_at(max_label + 1, -1);
    for (int v = 0; v < g.num_vertices(); v++) vertex_at[g.label(v)] = v;

    std::vector<char> in_cover(g.num_vertices(), 0);
    VerifyResult result;
    for (int pos = 0; pos <= max_label; pos++) {
        char c = bits[pos];
        if (c != '0' && c != '1' && c != '_')
            throw std::runtime_error("verify: invalid character in solution string");
        if (vertex_at[pos] < 0) {
            if (c == '1') throw std::runtime_error("verify: '1' at a vertex absent from the graph");
            continue;
        }
        if (c == '_') throw std::runtime_error("verify: '_' at a vertex present in the graph");
        if (c == '1') {
            in_cover[vertex_at[pos]] = 1;
            result.size++;
        }
    }
    result.valid = true;
    for (int v = 0; v < g.num_vertices() && result.valid; v++) {
        if (in_cover[v]) continue;
        for (int u : g.neighbors(v))
            if (!in_cover[u]) {
                result.valid = false;
                break;
            }
    }
    return result;
}

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitNoProof = 5;

GraphFormat format_from(const std::string& name) {
    if (name == "auto") return GraphFormat::Auto;
    if (name == "dimacs") return GraphFormat::Dimacs;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw CLI::ValidationError("--format", "expected auto, dimacs or edgelist");
}

Graph load_graph(const std::string& path, GraphFormat format, bool quiet) {
    ParseWarnings warnings;
    Graph g = parse_graph_file(path, format, &warnings);
    if (!quiet) {
        if (warnings.duplicate_edges > 0)
            std::cerr << "warning: " << warnings.duplicate_edges << " duplicate edge(s) collapsed\n";
        if (warnings.self_loops > 0)
            std::cerr << "warning: " << warnings.self_loops << " self-loop(s) dropped\n";
    }
    return g;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("VC_REDUCE_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

struct SolveOptions {
    std::string path;
    std::string config_name;
    std::string format = "auto";
    int branching = 2;
    int debug = 0;
    int trace = 0;
    double timeout = 3600.0;
    bool quiet = false;
    bool root = false;
    bool show_solution = false;
    bool clique_lb = false, lp_lb = false, cycle_lb = false;
    bool deg1 = false, dom = false, fold2 = false, lp_red = false, unconfined = false;
    bool twin = false, funnel = false, desk = false, packing = false, all_red = false;
    double shrink = 0.5;
    int bf_threshold = 10;
    std::uint64_t seed = env_seed();
};

ReductionConfig config_from(const SolveOptions& opt) {
    ReductionConfig config;
    if (!opt.config_name.empty()) {
        bool packing_dropped = false;
        auto preset = preset_config(opt.config_name, &packing_dropped);
        if (!preset) throw CLI::ValidationError("--config", "unknown preset " + opt.config_name);
        if (packing_dropped)
            std::cerr << "warning: packing reduction unavailable; " << opt.config_name
                      << " runs as r2_l4\n";
        config = *preset;
    }
    using K = ReductionKind;
    if (opt.deg1) config.enable(K::Deg1);
    if (opt.dom) config.enable(K::Dominance);
    if (opt.fold2) config.enable(K::Fold2);
    if (opt.lp_red) config.enable(K::Lp);
    if (opt.unconfined) config.enable(K::Unconfined);
    if (opt.twin) config.enable(K::Twin);
    if (opt.funnel) config.enable(K::Funnel);
    if (opt.desk) config.enable(K::Desk);
    if (opt.packing)
        std::cerr << "warning: packing reduction unavailable; flag ignored\n";
    if (opt.all_red) {
        for (int i = 0; i < kReductionKinds; i++) config.reductions[i] = true;
        config.clique_lb = config.lp_lb = config.cycle_lb = true;
    }
    if (opt.clique_lb) config.clique_lb = true;
    if (opt.lp_lb) config.lp_lb = true;
    if (opt.cycle_lb) config.cycle_lb = true;
    switch (opt.branching) {
        case 0: config.branching = BranchingRule::Random; break;
        case 1: config.branching = BranchingRule::MinDeg; break;
        case 2: config.branching = BranchingRule::MaxDeg; break;
        default: throw CLI::ValidationError("--branching", "expected 0, 1 or 2");
    }
    config.timeout_seconds = opt.timeout;
    config.shrink = opt.shrink;
    config.brute_force_threshold = opt.bf_threshold;
    config.seed = opt.seed;
    if (config.name == "custom" && !opt.config_name.empty()) config.name = opt.config_name;
    return config;
}

int cmd_solve(const SolveOptions& opt) {
    Graph g = load_graph(opt.path, format_from(opt.format), opt.quiet);
    ReductionConfig config = config_from(opt);
    config.validate();
    Solver solver(g, config);
    solver.shared().debug_level = opt.debug;
    solver.shared().trace_level = opt.trace;
    solver.shared().log = &std::cerr;
    if (!opt.quiet)
        std::cerr << "solving " << opt.path << " (n=" << g.num_vertices()
                  << ", m=" << g.num_edges() << ") with config " << config.name << "\n";
    SolveResult result = solver.run(opt.root);
    std::cout << render_stats(result.stats);
    if (opt.show_solution) std::cout << result.solution_bits << "\n";
    if (result.status == SolveStatus::Timeout) {
        if (!opt.quiet)
            std::cerr << (opt.root ? "root processed; instance not fully reduced\n"
                                   : "timeout: best value is an upper bound\n");
        return kExitNoProof;
    }
    return 0;
}

struct CsvRow {
    std::string instance;
    double spread = 0, nad = 0;
    std::string config;
    double runtime = 0;
    std::int64_t value = 0, branches = 0;
    bool timeout = false;
};

int cmd_analyze_run(const std::vector<std::string>& paths, const std::string& configs_arg,
                    double timeout, int workers, const std::string& csv_out,
                    const std::string& format, bool quiet) {
    std::vector<std::string> config_names;
    {
        std::istringstream ss(configs_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) config_names.push_back(item);
    }
    if (config_names.empty()) throw CLI::ValidationError("--configs", "no configs given");

    struct Task {
        std::size_t path_idx;
        std::size_t config_idx;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < paths.size(); p++)
        for (std::size_t c = 0; c < config_names.size(); c++) tasks.push_back({p, c});
    std::vector<CsvRow> rows(tasks.size());

    std::atomic<std::size_t> next{0};
    std::mutex io_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            const auto& task = tasks[t];
            try {
                Graph g = load_graph(paths[task.path_idx], format_from(format), true);
                InstanceProfile profile = compute_profile(g);
                bool packing_dropped = false;
                auto preset = preset_config(config_names[task.config_idx], &packing_dropped);
                if (!preset) throw std::runtime_error("unknown config " + config_names[task.config_idx]);
                preset->timeout_seconds = timeout;
                SolveResult result = solve(g, *preset);
                CsvRow row;
                row.instance = paths[task.path_idx];
                row.spread = profile.spread;
                row.nad = profile.nad;
                row.config = config_names[task.config_idx];
                row.runtime = result.runtime_seconds;
                row.value = result.value;
                row.branches = result.stats.num_branches;
                row.timeout = result.status == SolveStatus::Timeout;
                rows[t] = row;
                if (!quiet) {
                    std::lock_guard<std::mutex> lock(io_mutex);
                    std::cerr << row.instance << " " << row.config << " "
                              << (row.timeout ? "t/o" : std::to_string(row.runtime)) << "\n";
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(io_mutex);
                std::cerr << "error: " << e.what() << "\n";
                rows[t].instance = paths[task.path_idx];
                rows[t].config = config_names[task.config_idx];
                rows[t].timeout = true;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::max(1, workers);
    for (int i = 0; i < count; i++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!csv_out.empty()) {
        file.open(csv_out);
        if (!file) throw std::runtime_error("cannot open " + csv_out);
        out = &file;
    }
    *out << "instance,spread,nad,config,runtime,value,branches,status\n";
    for (const auto& row : rows)
        *out << row.instance << "," << row.spread << "," << row.nad << "," << row.config << ","
             << row.runtime << "," << row.value << "," << row.branches << ","
             << (row.timeout ? "timeout" : "ok") << "\n";
    return 0;
}

int cmd_analyze_csv(const std::string& csv_path, const std::string& collection_arg) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open " + csv_path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("analyze: empty csv");
    std::vector<std::string> header;
    {
        std::istringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) header.push_back(col);
    }
    auto column = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); i++)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    };
    int c_instance = column("instance"), c_config = column("config"),
        c_runtime = column("runtime"), c_status = column("status");
    if (c_instance < 0 || c_config < 0 || c_runtime < 0)
        throw std::runtime_error("analyze: csv needs instance, config and runtime columns");

    RuntimeTable table;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) <= std::max(c_runtime, std::max(c_instance, c_config)))
            continue;
        RuntimeCell rc;
        const std::string& rt = cells[c_runtime];
        if (rt == "t/o" || (c_status >= 0 && c_status < static_cast<int>(cells.size()) &&
                            cells[c_status] == "timeout")) {
            rc.timeout = true;
            rc.seconds = rt == "t/o" ? 0.0 : std::atof(rt.c_str());
        } else {
            rc.seconds = std::atof(rt.c_str());
        }
        table[cells[c_instance]][cells[c_config]] = rc;
    }

    std::cout << "instance,min,goldilocks,competitive\n";
    for (const auto& [instance, row] : table) {
        double min = std::numeric_limits<double>::infinity();
        for (const auto& [config, rc] : row)
            if (!rc.timeout) min = std::min(min, rc.seconds);
        auto comp = competitive_set(row);
        std::string joined;
        for (const auto& c : comp) {
            if (!joined.empty()) joined += ";";
            joined += c;
        }
        std::cout << instance << "," << (std::isfinite(min) ? std::to_string(min) : "t/o") << ","
                  << (goldilocks(row) ? "yes" : "no") << "," << joined << "\n";
    }
    if (!collection_arg.empty()) {
        std::set<std::string> collection;
        std::istringstream ss(collection_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) collection.insert(item);
        std::cout << "globally_competitive,"
                  << (globally_competitive(table, collection) ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Branch-and-reduce minimum vertex cover solver"};
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 ok, 2 usage error, 3 bad input, 4 infeasible generator parameters,\n"
        "5 finished without optimality proof. VC_REDUCE_SEED seeds random branching.");

    SolveOptions sopt;
    auto* solve_cmd = app.add_subcommand("solve", "Solve minimum vertex cover exactly");
    solve_cmd->add_option("instance", sopt.path, "graph file")->required();
    solve_cmd->add_option("-b,--branching", sopt.branching, "0: random, 1: mindeg, 2: maxdeg");
    solve_cmd->add_option("-d,--debug", sopt.debug,
                          "0: none, 1: branching and decompose, 2: + basic reduction, 3: detailed");
    solve_cmd->add_option("-t,--timeout", sopt.timeout, "timeout in seconds");
    solve_cmd->add_option("--trace", sopt.trace,
                          "0: none, 1: incumbent events, 2: full trace with solution vectors");
    solve_cmd->add_flag("--quiet", sopt.quiet, "don't print progress messages");
    solve_cmd->add_flag("--root", sopt.root, "only process root node -- no branching");
    solve_cmd->add_flag("--show_solution", sopt.show_solution, "print the solution bit vector");
    solve_cmd->add_flag("--clique_lb", sopt.clique_lb, "enable clique lower bound");
    solve_cmd->add_flag("--lp_lb", sopt.lp_lb, "enable lp lower bound");
    solve_cmd->add_flag("--cycle_lb", sopt.cycle_lb, "enable cycle lower bound");
    solve_cmd->add_flag("--deg1", sopt.deg1, "enable degree1 reduction");
    solve_cmd->add_flag("--dom", sopt.dom, "enable dominance reduction");
    solve_cmd->add_flag("--fold2", sopt.fold2, "enable fold2 reduction");
    solve_cmd->add_flag("--LP", sopt.lp_red, "enable LP reduction");
    solve_cmd->add_flag("--unconfined", sopt.unconfined, "enable unconfined reduction");
    solve_cmd->add_flag("--twin", sopt.twin, "enable twin reduction");
    solve_cmd->add_flag("--funnel", sopt.funnel, "enable funnel reduction");
    solve_cmd->add_flag("--desk", sopt.desk, "enable desk reduction");
    solve_cmd->add_flag("--packing", sopt.packing, "packing reduction (not available; ignored)");
    solve_cmd->add_flag("--all_red", sopt.all_red,
                        "all reductions except packing, with clique+lp+cycle bounds");
    solve_cmd->add_option("--config", sopt.config_name, "named preset as a baseline");
    solve_cmd->add_option("--format", sopt.format, "auto|dimacs|edgelist");
    solve_cmd->add_option("--shrink", sopt.shrink, "rebuild threshold as a fraction of n");
    solve_cmd->add_option("--bf_threshold", sopt.bf_threshold, "brute force below this size");
    solve_cmd->add_option("--seed", sopt.seed, "seed for random branching");

    std::string p_path, p_format = "auto";
    bool p_oct = false, p_csv = false;
    std::uint64_t p_seed = env_seed();
    auto* profile_cmd = app.add_subcommand("profile", "Print instance measures and a recommendation");
    profile_cmd->add_option("instance", p_path, "graph file")->required();
    profile_cmd->add_flag("--oct", p_oct, "estimate the odd cycle transversal share");
    profile_cmd->add_flag("--csv", p_csv, "emit one csv row instead of text");
    profile_cmd->add_option("--seed", p_seed, "seed for the oct heuristic");
    profile_cmd->add_option("--format", p_format, "auto|dimacs|edgelist");

    std::string g_kind, g_out;
    BlgParams blg;
    GeoParams geo;
    double g_min_deg = -1, g_max_deg = -1;
    bool g_wrap = false;
    std::uint64_t g_seed = env_seed();
    int g_n = 0;
    double g_avg = 0, g_deg_var = 1;
    std::int64_t g_edges = 0;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a random instance");
    generate_cmd->add_option("kind", g_kind, "blg or geo")->required();
    generate_cmd->add_option("--n", g_n, "vertices")->required();
    generate_cmd->add_option("--avg", g_avg, "blg: average degree");
    generate_cmd->add_option("--deg-var", g_deg_var, "blg: degree variation parameter");
    generate_cmd->add_option("--min-deg", g_min_deg, "blg: minimum degree");
    generate_cmd->add_option("--max-deg", g_max_deg, "blg: maximum degree");
    generate_cmd->add_option("--edges", g_edges, "geo: desired edge count");
    generate_cmd->add_flag("--wraparound", g_wrap, "geo: torus metric");
    generate_cmd->add_option("--seed", g_seed, "generator seed");
    generate_cmd->add_option("-o,--output", g_out, "output path (default stdout)");

    std::string v_graph, v_solution, v_solution_file, v_format = "auto";
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution bit vector");
    verify_cmd->add_option("instance", v_graph, "graph file")->required();
    verify_cmd->add_option("solution", v_solution, "bit string ('_' for absent labels)");
    verify_cmd->add_option("--solution-file", v_solution_file, "file holding the bit string");
    verify_cmd->add_option("--format", v_format, "auto|dimacs|edgelist");

    std::string c_in, c_out, c_format = "auto", c_out_format = "edgelist";
    auto* complement_cmd = app.add_subcommand("complement", "Write the complement graph");
    complement_cmd->add_option("instance", c_in, "graph file")->required();
    complement_cmd->add_option("-o,--output", c_out, "output path (default stdout)");
    complement_cmd->add_option("--format", c_format, "input format");
    complement_cmd->add_option("--output-format", c_out_format, "dimacs|edgelist");

    std::vector<std::string> a_paths;
    std::string a_csv, a_collection, a_configs = "None,DF2,r0_l1,r2_l4", a_csv_out,
                a_format = "auto";
    bool a_run = false, a_quiet = false;
    double a_timeout = 900.0;
    int a_workers = 1;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Competitiveness analysis of runtime data (or --run to produce it)");
    analyze_cmd->add_option("--csv", a_csv, "runtime csv to analyze");
    analyze_cmd->add_option("--collection", a_collection,
                            "comma list checked for global competitiveness");
    analyze_cmd->add_flag("--run", a_run, "run the batch solver to produce the csv");
    analyze_cmd->add_option("--configs", a_configs, "comma list of presets for --run");
    analyze_cmd->add_option("--timeout", a_timeout, "per-solve timeout for --run");
    analyze_cmd->add_option("--workers", a_workers, "parallel workers for --run");
    analyze_cmd->add_option("--csv-out", a_csv_out, "where --run writes its csv");
    analyze_cmd->add_option("--format", a_format, "input format for --run");
    analyze_cmd->add_flag("--quiet", a_quiet, "don't print per-solve progress");
    analyze_cmd->add_option("instances", a_paths, "graph files for --run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(sopt);
        if (profile_cmd->parsed()) {
            Graph g = load_graph(p_path, format_from(p_format), false);
            InstanceProfile profile = compute_profile(g, p_oct, p_seed);
            if (p_csv) {
                std::cout << profile_csv_header() << "\n"
                          << profile_csv_row(p_path, profile) << "\n";
            } else {
                Recommendation rec = recommend_config(profile);
                std::cout << profile_text(profile, &rec);
            }
            return 0;
        }
        if (generate_cmd->parsed()) {
            Graph g;
            std::string name;
            try {
                if (g_kind == "blg") {
                    blg.n = g_n;
                    blg.avg_degree = g_avg;
                    blg.deg_var = g_deg_var;
                    if (g_min_deg >= 0) blg.min_deg = static_cast<int>(g_min_deg);
                    if (g_max_deg >= 0) blg.max_deg = static_cast<int>(g_max_deg);
                    blg.seed = g_seed;
                    g = generate_blg(blg);
                    name = blg_name(blg);
                } else if (g_kind == "geo") {
                    geo.n = g_n;
                    geo.target_edges = g_edges;
                    geo.wraparound = g_wrap;
                    geo.seed = g_seed;
                    g = generate_geometric(geo);
                    name = geo_name(geo);
                } else {
                    throw CLI::ValidationError("kind", "expected blg or geo");
                }
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInfeasible;
            }
            std::ostringstream meta;
            meta << name << " seed=" << g_seed << " n=" << g.num_vertices()
                 << " m=" << g.num_edges();
            if (g_out.empty()) {
                write_graph(g, std::cout, GraphFormat::EdgeList, meta.str());
            } else {
                std::ofstream out(g_out);
                if (!out) throw std::runtime_error("cannot open " + g_out);
                write_graph(g, out, GraphFormat::EdgeList, meta.str());
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            Graph g = load_graph(v_graph, format_from(v_format), false);
            std::string bits = v_solution;
            if (!v_solution_file.empty()) {
                std::ifstream in(v_solution_file);
                if (!in) throw std::runtime_error("cannot open " + v_solution_file);
                std::getline(in, bits);
            }
            while (!bits.empty() && (bits.back() == '\n' || bits.back() == '\r' || bits.back() == ' '))
                bits.pop_back();
            if (bits.empty()) throw std::runtime_error("verify: no solution string given");
            VerifyResult result = verify_solution(g, bits);
            std::cout << (result.valid ? "valid" : "invalid") << " size=" << result.size << "\n";
            return result.valid ? 0 : 1;
        }
        if (complement_cmd->parsed()) {
            Graph g = load_graph(c_in, format_from(c_format), false);
            Graph co = complement(g);
            GraphFormat of = c_out_format == "dimacs" ? GraphFormat::Dimacs : GraphFormat::EdgeList;
            if (c_out.empty()) {
                write_graph(co, std::cout, of);
            } else {
                std::ofstream out(c_out);
                if (!out) throw std::runtime_error("cannot open " + c_out);
                write_graph(co, out, of);
            }
            return 0;
        }
        if (analyze_cmd->parsed()) {
            if (a_run)
                return cmd_analyze_run(a_paths, a_configs, a_timeout, a_workers, a_csv_out,
                                       a_format, a_quiet);
            if (a_csv.empty())
                throw CLI::ValidationError("analyze", "need --csv to analyze or --run to produce");
            return cmd_analyze_csv(a_csv, a_collection);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}

}  // namespace vcbr
