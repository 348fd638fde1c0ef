// vgsolve: decide solvability properties of viewing graphs from the command
// line, run the minimal-graph census, construct minimal solvable graphs, and
// convert between graph formats.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "vgsolve/census.hpp"
#include "vgsolve/counting.hpp"
#include "vgsolve/epipolar.hpp"
#include "vgsolve/moves.hpp"
#include "vgsolve/report.hpp"

namespace {

struct GlobalOpts {
    uint64_t seed = 42;
    int trials = 3;
    long bound = 1000;
    int jobs = 0; // 0 = hardware
    std::string format = "auto";
    bool one_based = false;
};

vg::GraphFormat parse_format(const std::string& f) {
    if (f == "edge-list") return vg::GraphFormat::EdgeList;
    if (f == "graph6") return vg::GraphFormat::Graph6;
    return vg::GraphFormat::Auto;
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Reads the graph from the positional argument, --file, or stdin ("-").
vg::ViewingGraph load_graph(const std::string& arg, const std::string& file,
                            const GlobalOpts& opts) {
    std::string text;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        text = slurp(in);
    } else if (arg.empty() || arg == "-") {
        text = slurp(std::cin);
    } else {
        text = arg;
    }
    return vg::parse_graph(text, parse_format(opts.format), opts.one_based ? 1 : 0);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"viewing graph solvability toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts opts;
    if (const char* env = std::getenv("VG_SEED")) opts.seed = std::strtoull(env, nullptr, 10);
    if (const char* env = std::getenv("VG_JOBS")) opts.jobs = std::atoi(env);
    app.add_option("--seed", opts.seed, "RNG seed for pinhole sampling");
    app.add_option("--trials", opts.trials, "pinhole samples per finite-solvability verdict");
    app.add_option("--bound", opts.bound, "coordinate bound for pinhole sampling");
    app.add_option("--jobs", opts.jobs, "worker threads (0 = hardware)");
    app.add_option("--format", opts.format, "graph input format: edge-list, graph6, auto")
        ->check(CLI::IsMember({"edge-list", "graph6", "auto"}));
    app.add_flag("--one-based", opts.one_based, "edge-list input uses 1-based labels");

    // check
    std::string check_graph, check_file, check_output, check_dump;
    auto* cmd_check = app.add_subcommand("check", "run all solvability tests on one graph");
    cmd_check->add_option("graph", check_graph, "graph text (edge list or graph6; - for stdin)");
    cmd_check->add_option("--file", check_file, "read the graph from a file");
    cmd_check->add_option("--output", check_output, "write the JSON report here");
    cmd_check->add_option("--dump-system", check_dump,
                          "write the tangent system as `row col value` triplets");

    // closure
    std::string cl_graph, cl_file, cl_out;
    bool cl_trace = false, cl_dot = false;
    auto* cmd_closure = app.add_subcommand("closure", "print the moves closure of a graph");
    cmd_closure->add_option("graph", cl_graph, "graph text (- for stdin)");
    cmd_closure->add_option("--file", cl_file, "read the graph from a file");
    cmd_closure->add_flag("--trace", cl_trace, "print one line per applied move");
    cmd_closure->add_flag("--dot", cl_dot, "emit DOT with solid/dashed styling");
    cmd_closure->add_option("--out", cl_out, "write output here instead of stdout");

    // census
    std::vector<int> census_n;
    std::string census_records, census_json;
    bool census_resume = false;
    auto* cmd_census = app.add_subcommand("census", "count solvable minimal graphs");
    cmd_census->add_option("--n", census_n, "vertex counts (3..9)")->required();
    cmd_census->add_option("--records", census_records, "line-JSON per-graph record file");
    cmd_census->add_flag("--resume", census_resume, "skip graphs already in the record file");
    cmd_census->add_option("--json", census_json, "write the full JSON report here");

    // construct
    int construct_n = 0;
    std::string construct_to = "edge-list";
    auto* cmd_construct = app.add_subcommand("construct", "emit a minimal solvable graph");
    cmd_construct->add_option("--n", construct_n, "vertex count (>= 2)")->required();
    cmd_construct->add_option("--to", construct_to, "output format")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    // convert
    std::string conv_graph, conv_file, conv_to = "graph6";
    auto* cmd_convert = app.add_subcommand("convert", "convert between graph formats");
    cmd_convert->add_option("graph", conv_graph, "graph text (- for stdin)");
    cmd_convert->add_option("--file", conv_file, "read the graph from a file");
    cmd_convert->add_option("--to", conv_to, "output format")
        ->check(CLI::IsMember({"edge-list", "graph6"}));

    // oracle (debugging aid, hidden from help)
    std::string oracle_check = "move2";
    int oracle_count = 10;
    auto* cmd_oracle = app.add_subcommand("oracle", "");
    cmd_oracle->group("");
    cmd_oracle->add_option("--check", oracle_check, "move2, move3, or triple");
    cmd_oracle->add_option("--count", oracle_count, "instances to run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_check) {
            vg::ViewingGraph g = load_graph(check_graph, check_file, opts);
            vg::AnalysisOptions a{opts.trials, opts.bound, opts.seed};
            vg::SolvabilityReport rep = vg::analyze(g, a);
            if (!check_dump.empty() && vg::is_connected(g)) {
                auto pin = vg::sample_pinholes(g.n(), opts.bound, opts.seed);
                auto sys = vg::assemble_system(g, pin);
                std::ofstream out(check_dump);
                vg::write_triplets(sys.matrix, out);
            }
            write_output(check_output, vg::report_to_json(rep));
            return vg::exit_code_for(rep.overall);
        }
        if (*cmd_closure) {
            vg::ViewingGraph g = load_graph(cl_graph, cl_file, opts);
            auto [state, trace] = vg::closure(g);
            std::ostringstream out;
            if (cl_dot) {
                out << vg::to_dot(vg::MixedGraph(g)) << vg::to_dot(state);
            } else {
                if (cl_trace) out << vg::trace_to_text(trace);
                out << "solid:";
                for (auto [a, b] : state.solid_edges()) out << " " << a + 1 << "-" << b + 1;
                out << "\ndashed:";
                for (auto [a, b] : state.dashed_arrows()) out << " " << a + 1 << "->" << b + 1;
                out << "\n" << (state.complete() ? "closure complete\n" : "closure incomplete\n");
            }
            write_output(cl_out, out.str());
            return state.complete() ? 0 : 10;
        }
        if (*cmd_census) {
            vg::CensusOptions c;
            c.trials = opts.trials;
            c.bound = opts.bound;
            c.seed = opts.seed;
            c.jobs = opts.jobs > 0 ? opts.jobs
                                   : static_cast<int>(std::thread::hardware_concurrency());
            c.records_path = census_records;
            c.resume = census_resume;
            std::vector<vg::CensusRow> rows;
            for (int n : census_n) rows.push_back(vg::run_census(n, c));
            std::cout << vg::census_table(rows);
            if (!census_json.empty()) write_output(census_json, vg::census_report_json(rows));
            return 0;
        }
        if (*cmd_construct) {
            vg::ViewingGraph g = vg::minimal_solvable(construct_n);
            std::cout << (construct_to == "graph6" ? vg::to_graph6(g) : vg::to_edge_list(g))
                      << "\n";
            return 0;
        }
        if (*cmd_convert) {
            vg::ViewingGraph g = load_graph(conv_graph, conv_file, opts);
            std::cout << (conv_to == "graph6" ? vg::to_graph6(g) : vg::to_edge_list(g)) << "\n";
            return 0;
        }
        if (*cmd_oracle) {
            vg::Rng rng(opts.seed);
            int verified = 0, degenerate = 0;
            for (int i = 0; i < oracle_count; i++) {
                if (oracle_check == "move2") {
                    std::array<vg::Camera, 4> cams;
                    for (auto& c : cams) c = vg::random_camera(rng);
                    auto r = vg::verify_move_II(cams);
                    (r.verified ? verified : degenerate)++;
                } else if (oracle_check == "move3") {
                    std::array<vg::Camera, 5> cams;
                    for (auto& c : cams) c = vg::random_camera(rng);
                    auto r = vg::verify_move_III(cams);
                    (r.verified ? verified : degenerate)++;
                } else {
                    auto p1 = vg::random_camera(rng), p2 = vg::random_camera(rng),
                         p3 = vg::random_camera(rng);
                    auto ep = vg::triple_epipoles(p1, p2, p3);
                    auto res = vg::triple_residuals(vg::fundamental(p1, p2),
                                                    vg::fundamental(p2, p3),
                                                    vg::fundamental(p3, p1), ep);
                    bool ok = res[0] == 0 && res[1] == 0 && res[2] == 0;
                    (ok ? verified : degenerate)++;
                }
            }
            std::cout << oracle_check << ": " << verified << " verified, " << degenerate
                      << " degenerate/failed of " << oracle_count << "\n";
            return degenerate == 0 ? 0 : 1;
        }
    } catch (const vg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
