#include "vgsolve/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "vgsolve/counting.hpp"
#include "vgsolve/enumerate.hpp"
#include "vgsolve/moves.hpp"
#include "vgsolve/tangent.hpp"

namespace vg {

using nlohmann::json;

GraphRecord evaluate_graph(const ViewingGraph& g, int trials, long bound, uint64_t seed) {
    GraphRecord rec;
    rec.graph6 = to_graph6(g);
    auto verdict = check_all_necessary(g);
    rec.candidate = verdict.passed;
    rec.violated_rule = verdict.violated_rule;
    rec.moves_solvable = solvable_with_moves(g);
    auto fin = finite_solvable(g, trials, bound, seed);
    rec.finite_solvable = fin.finite_solvable;
    rec.kernel_dim = fin.kernel_dim;
    return rec;
}

std::string record_to_json_line(const GraphRecord& rec) {
    json j;
    j["graph6"] = rec.graph6;
    j["candidate"] = rec.candidate;
    if (rec.violated_rule) j["violated_rule"] = rule_name(*rec.violated_rule);
    j["moves_solvable"] = rec.moves_solvable;
    j["finite_solvable"] = rec.finite_solvable;
    j["kernel_dim"] = rec.kernel_dim;
    return j.dump();
}

GraphRecord record_from_json_line(const std::string& line) {
    json j = json::parse(line);
    GraphRecord rec;
    rec.graph6 = j.at("graph6").get<std::string>();
    rec.candidate = j.at("candidate").get<bool>();
    if (j.contains("violated_rule")) {
        std::string name = j["violated_rule"].get<std::string>();
        for (Rule r : {Rule::MinDegree, Rule::AdjacentDegree2, Rule::NotBiconnected,
                       Rule::TooFewEdges, Rule::SubgraphDeficiency,
                       Rule::DisjointFamilyDeficiency})
            if (rule_name(r) == name) rec.violated_rule = r;
    }
    rec.moves_solvable = j.at("moves_solvable").get<bool>();
    rec.finite_solvable = j.at("finite_solvable").get<bool>();
    rec.kernel_dim = j.at("kernel_dim").get<int>();
    return rec;
}

CensusRow run_census(int n, const CensusOptions& opts) {
    if (n < 3 || n > 9) throw std::domain_error("census limited to 3 <= n <= 9");
    CensusRow row;
    row.n = n;
    row.e = e_min(n);

    std::vector<ViewingGraph> graphs = enumerate_connected(n, row.e);
    row.connected = static_cast<int>(graphs.size());

    // Resume: load already-computed records keyed by graph6.
    std::map<std::string, GraphRecord> done;
    if (opts.resume && !opts.records_path.empty()) {
        std::ifstream in(opts.records_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            GraphRecord rec = record_from_json_line(line);
            done[rec.graph6] = std::move(rec);
        }
    }

    std::ofstream records_out;
    std::mutex records_mutex;
    if (!opts.records_path.empty())
        records_out.open(opts.records_path, opts.resume ? std::ios::app : std::ios::trunc);

    std::vector<GraphRecord> results(graphs.size());
    std::atomic<size_t> next{0};
    int jobs = std::max(1, opts.jobs);
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            std::string key = to_graph6(graphs[i]);
            auto it = done.find(key);
            if (it != done.end()) {
                results[i] = it->second;
                continue;
            }
            results[i] = evaluate_graph(graphs[i], opts.trials, opts.bound, opts.seed);
            if (records_out.is_open()) {
                std::lock_guard<std::mutex> lock(records_mutex);
                records_out << record_to_json_line(results[i]) << "\n";
                records_out.flush();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(results.begin(), results.end(),
              [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });
    for (const auto& rec : results) {
        if (rec.candidate) row.candidates++;
        if (rec.moves_solvable) row.moves_solvable++;
        if (rec.finite_solvable) row.finite_solvable++;
        if (rec.candidate && rec.finite_solvable && !rec.moves_solvable)
            row.undecided.push_back(rec.graph6);
    }
    row.records = std::move(results);
    return row;
}

namespace {

json row_to_json(const CensusRow& row) {
    json j;
    j["n"] = row.n;
    j["e"] = row.e;
    j["connected"] = row.connected;
    j["candidates"] = row.candidates;
    j["moves_solvable"] = row.moves_solvable;
    j["finite_solvable"] = row.finite_solvable;
    j["undecided"] = row.undecided;
    json recs = json::array();
    for (const auto& rec : row.records) recs.push_back(json::parse(record_to_json_line(rec)));
    j["records"] = std::move(recs);
    return j;
}

} // namespace

std::string census_report_json(const std::vector<CensusRow>& rows) {
    json j = json::array();
    for (const auto& row : rows) j.push_back(row_to_json(row));
    return j.dump(2) + "\n";
}

std::string census_table(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    auto line = [&](const std::string& label, auto get) {
        out << label;
        for (const auto& row : rows) {
            std::ostringstream cell;
            cell << get(row);
            out << std::string(std::max<size_t>(1, 10 - cell.str().size()), ' ') << cell.str();
        }
        out << "\n";
    };
    line("(n, e)             ", [](const CensusRow& r) {
        return "(" + std::to_string(r.n) + "," + std::to_string(r.e) + ")";
    });
    line("connected          ", [](const CensusRow& r) { return r.connected; });
    line("candidates         ", [](const CensusRow& r) { return r.candidates; });
    line("solvable with moves", [](const CensusRow& r) { return r.moves_solvable; });
    line("finite solvable    ", [](const CensusRow& r) { return r.finite_solvable; });
    return out.str();
}

} // namespace vg
