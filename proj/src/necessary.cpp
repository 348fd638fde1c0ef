#include "vgsolve/necessary.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "vgsolve/counting.hpp"

namespace vg {

std::string rule_name(Rule r) {
    switch (r) {
    case Rule::MinDegree: return "MinDegree";
    case Rule::AdjacentDegree2: return "AdjacentDegree2";
    case Rule::NotBiconnected: return "NotBiconnected";
    case Rule::TooFewEdges: return "TooFewEdges";
    case Rule::SubgraphDeficiency: return "SubgraphDeficiency";
    case Rule::DisjointFamilyDeficiency: return "DisjointFamilyDeficiency";
    }
    return "?";
}

namespace {

NecessaryVerdict fail(Rule r, Witness w) {
    NecessaryVerdict v;
    v.passed = false;
    v.violated_rule = r;
    v.witness = std::move(w);
    return v;
}

} // namespace

NecessaryVerdict check_degree_rules(const ViewingGraph& g) {
    int n = g.n();
    if (n <= 3) {
        // Small graphs must be complete (degree n-1 everywhere).
        for (int v = 0; v < n; v++)
            if (g.degree(v) < n - 1) return fail(Rule::MinDegree, v);
        return {};
    }
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : g.edges()) {
        deg[a]++;
        deg[b]++;
    }
    for (int v = 0; v < n; v++)
        if (deg[v] < 2) return fail(Rule::MinDegree, v);
    for (const auto& [a, b] : g.edges())
        if (deg[a] == 2 && deg[b] == 2)
            return fail(Rule::AdjacentDegree2, std::make_pair(a, b));
    return {};
}

NecessaryVerdict check_subgraph_deficiency(const ViewingGraph& g) {
    int n = g.n();
    if (n > 16) throw std::domain_error("subgraph deficiency check limited to n <= 16");
    int d_total = deficiency(n, g.edge_count());
    auto adj = g.adjacency_masks();
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        int size = std::popcount(mask);
        if (size < 2) continue;
        int e2 = 0;
        for (int v = 0; v < n; v++)
            if ((mask >> v) & 1) e2 += std::popcount(adj[v] & mask);
        int e_sub = e2 / 2;
        if (deficiency(size, e_sub) > d_total) {
            std::vector<int> subset;
            for (int v = 0; v < n; v++)
                if ((mask >> v) & 1) subset.push_back(v);
            return fail(Rule::SubgraphDeficiency, subset);
        }
    }
    return {};
}

namespace {

struct FamilyCandidate {
    uint32_t edge_mask;
    int d;
    int min_edge;
};

// Connected edge subsets with deficiency >= 1; those are the only members an
// Eq-violating family ever needs.
std::vector<FamilyCandidate> family_candidates(const ViewingGraph& g) {
    int e = g.edge_count();
    std::vector<FamilyCandidate> out;
    for (uint32_t mask = 1; mask < (1u << e); mask++) {
        int cnt = std::popcount(mask);
        if (cnt < 3) continue; // d >= 1 needs at least a triangle
        uint32_t verts = 0;
        for (int k = 0; k < e; k++)
            if ((mask >> k) & 1)
                verts |= (1u << g.edges()[k].first) | (1u << g.edges()[k].second);
        int nv = std::popcount(verts);
        int d = deficiency(nv, cnt);
        if (d < 1) continue;
        // connectivity of the edge-induced subgraph
        std::vector<int> parent(g.n());
        for (int v = 0; v < g.n(); v++) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = nv;
        for (int k = 0; k < e; k++) {
            if (!((mask >> k) & 1)) continue;
            int ra = find(g.edges()[k].first), rb = find(g.edges()[k].second);
            if (ra != rb) {
                parent[ra] = rb;
                comps--;
            }
        }
        if (comps != 1) continue;
        out.push_back({mask, d, std::countr_zero(mask)});
    }
    return out;
}

struct FamilySearch {
    const std::vector<FamilyCandidate>& cands;
    std::vector<std::vector<int>> by_min_edge; // candidate indices per first edge
    int e, k_max, target;
    // Densest candidate, as a fraction: no packing of disjoint members can
    // exceed dens_num/dens_den per edge, which prunes the search.
    long dens_num = 0, dens_den = 1;
    std::vector<int> chosen;
    std::vector<int> result;

    bool bound_reached(int sum, int used_edges) const {
        // sum + dens * (e - used_edges) > target possible?
        return static_cast<long>(sum) * dens_den + dens_num * (e - used_edges) >
               static_cast<long>(target) * dens_den;
    }

    bool dfs(int edge, uint32_t used, int sum, int count) {
        if (sum > target) {
            result = chosen;
            return true;
        }
        if (count >= k_max || !bound_reached(sum, std::popcount(used))) return false;
        while (edge < e && ((used >> edge) & 1)) edge++;
        if (edge >= e) return false;
        for (int idx : by_min_edge[edge]) {
            if (cands[idx].edge_mask & used) continue;
            chosen.push_back(idx);
            if (dfs(edge + 1, used | cands[idx].edge_mask, sum + cands[idx].d, count + 1))
                return true;
            chosen.pop_back();
        }
        return dfs(edge + 1, used | (1u << edge), sum, count);
    }
};

} // namespace

NecessaryVerdict check_disjoint_family(const ViewingGraph& g, int k_max) {
    int e = g.edge_count();
    if (g.n() > 16 || e > 24)
        throw std::domain_error("disjoint family check limited to n <= 16, e <= 24");
    if (k_max < 2) throw std::domain_error("check_disjoint_family requires k_max >= 2");
    int target = deficiency(g.n(), e);

    // Analytic ceiling on any member's deficiency per edge: a subgraph with
    // e_i edges has at least clique-many vertices. If even that density
    // cannot push a packing past the target, skip the search entirely.
    {
        long best_num = 0, best_den = 1;
        for (int ei = 3, n_min = 3; ei <= e; ei++) {
            while (n_min * (n_min - 1) / 2 < ei) n_min++;
            long d = 7L * ei - 11L * n_min + 15;
            if (d >= 1 && d * best_den > best_num * ei) {
                best_num = d;
                best_den = ei;
            }
        }
        if (best_num * e <= static_cast<long>(target) * best_den) return {};
    }

    auto cands = family_candidates(g);
    FamilySearch search{cands, {}, e, k_max, target, 0, 1, {}, {}};
    for (const auto& c : cands) {
        int ce = std::popcount(c.edge_mask);
        if (static_cast<long>(c.d) * search.dens_den > search.dens_num * ce) {
            search.dens_num = c.d;
            search.dens_den = ce;
        }
    }
    search.by_min_edge.resize(e);
    for (size_t i = 0; i < cands.size(); i++) search.by_min_edge[cands[i].min_edge].push_back((int)i);
    if (!search.dfs(0, 0, 0, 0)) return {};
    std::vector<EdgeList> family;
    for (int idx : search.result) {
        EdgeList member;
        for (int k = 0; k < e; k++)
            if ((cands[idx].edge_mask >> k) & 1) member.push_back(g.edges()[k]);
        family.push_back(std::move(member));
    }
    return fail(Rule::DisjointFamilyDeficiency, family);
}

NecessaryVerdict check_all_necessary(const ViewingGraph& g) {
    if (!is_connected(g)) {
        // Report the smallest component as the witness.
        std::vector<int> comp = component_of(g, 0);
        for (int v = 0; v < g.n(); v++) {
            auto c = component_of(g, v);
            if (c.size() < comp.size()) comp = c;
        }
        return fail(Rule::NotBiconnected, comp);
    }
    if (!is_biconnected(g)) {
        // Find an articulation vertex by brute force (n is small here).
        for (int v = 0; v < g.n(); v++) {
            std::vector<std::pair<int, int>> rest;
            for (const auto& [a, b] : g.edges())
                if (a != v && b != v) rest.push_back({a, b});
            // Count components after deleting v.
            std::vector<int> parent(g.n());
            for (int i = 0; i < g.n(); i++) parent[i] = i;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int comps = g.n() - 1;
            for (const auto& [a, b] : rest) {
                int ra = find(a), rb = find(b);
                if (ra != rb) {
                    parent[ra] = rb;
                    comps--;
                }
            }
            if (g.n() >= 3 && comps > 1) return fail(Rule::NotBiconnected, v);
        }
        return fail(Rule::NotBiconnected, Witness{});
    }
    auto degrees = check_degree_rules(g);
    if (!degrees.passed) return degrees;
    if (g.n() >= 2 && g.edge_count() < e_min(g.n()))
        return fail(Rule::TooFewEdges, Witness{});
    auto sub = check_subgraph_deficiency(g);
    if (!sub.passed) return sub;
    int k_max = std::max(2, g.edge_count() / 3);
    return check_disjoint_family(g, k_max);
}

} // namespace vg
