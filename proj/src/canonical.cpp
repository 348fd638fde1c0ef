#include "vgsolve/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace vg {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

namespace {

constexpr int kMaxN = 16;

struct UnionFind {
    std::array<int, kMaxN> parent;
    void init(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[a] = b;
    }
};

// Ordered partition of the vertices: `order` lists vertices, cells are the
// consecutive ranges [cell_start[k], cell_start[k+1]).
struct Partition {
    std::array<int, kMaxN> order;
    std::vector<int> cell_start; // ends with n
};

class Searcher {
public:
    Searcher(int n, std::vector<uint32_t> adj, std::vector<int> colors)
        : n_(n), adj_(std::move(adj)), colors_(std::move(colors)) {
        orbits_.init(n);
    }

    void run() {
        Partition p;
        // Initial cells: color classes in ascending color order.
        std::vector<int> idx(n_);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](int a, int b) { return colors_[a] < colors_[b]; });
        p.cell_start.push_back(0);
        for (int i = 0; i < n_; i++) {
            p.order[i] = idx[i];
            if (i + 1 < n_ && colors_[idx[i + 1]] != colors_[idx[i]])
                p.cell_start.push_back(i + 1);
        }
        p.cell_start.push_back(n_);
        refine(p);
        search(p);
    }

    std::vector<uint8_t> best_bytes;
    std::array<int, kMaxN> best_order{}; // position -> vertex for best leaf

private:
    int n_;
    std::vector<uint32_t> adj_;
    std::vector<int> colors_;
    UnionFind orbits_;
    bool have_best_ = false;

    static uint32_t cell_mask(const Partition& p, int k) {
        uint32_t m = 0;
        for (int i = p.cell_start[k]; i < p.cell_start[k + 1]; i++) m |= 1u << p.order[i];
        return m;
    }

    // Equitable refinement: split cells by neighbor counts into splitter cells
    // until stable. Deterministic: counts ascending, stable within.
    void refine(Partition& p) const {
        std::vector<int> work; // indices of cells to use as splitters
        for (size_t k = 0; k + 1 < p.cell_start.size(); k++) work.push_back(static_cast<int>(k));
        while (!work.empty()) {
            int k = work.back();
            work.pop_back();
            if (k + 1 >= static_cast<int>(p.cell_start.size())) continue;
            uint32_t splitter = cell_mask(p, k);
            // Try to split every cell by adjacency count into the splitter.
            for (int c = 0; c + 1 < static_cast<int>(p.cell_start.size()); c++) {
                int lo = p.cell_start[c], hi = p.cell_start[c + 1];
                if (hi - lo <= 1) continue;
                int cnt0 = std::popcount(adj_[p.order[lo]] & splitter);
                bool uniform = true;
                for (int i = lo + 1; i < hi && uniform; i++)
                    uniform = std::popcount(adj_[p.order[i]] & splitter) == cnt0;
                if (uniform) continue;
                std::stable_sort(p.order.begin() + lo, p.order.begin() + hi, [&](int a, int b) {
                    return std::popcount(adj_[a] & splitter) < std::popcount(adj_[b] & splitter);
                });
                // Insert new cell boundaries.
                std::vector<int> cuts;
                for (int i = lo + 1; i < hi; i++)
                    if (std::popcount(adj_[p.order[i]] & splitter) !=
                        std::popcount(adj_[p.order[i - 1]] & splitter))
                        cuts.push_back(i);
                for (int cut : cuts)
                    p.cell_start.insert(
                        std::upper_bound(p.cell_start.begin(), p.cell_start.end(), cut), cut);
                // Re-seed the worklist; cells shifted, so just push all.
                work.clear();
                for (size_t kk = 0; kk + 1 < p.cell_start.size(); kk++)
                    work.push_back(static_cast<int>(kk));
                c = -1; // restart cell scan with the new partition
            }
        }
    }

    int first_nonsingleton(const Partition& p) const {
        for (size_t k = 0; k + 1 < p.cell_start.size(); k++)
            if (p.cell_start[k + 1] - p.cell_start[k] > 1) return static_cast<int>(k);
        return -1;
    }

    std::vector<uint8_t> encode(const Partition& p) const {
        std::vector<uint8_t> bytes;
        bytes.push_back(static_cast<uint8_t>(n_));
        for (int i = 0; i < n_; i++) bytes.push_back(static_cast<uint8_t>(colors_[p.order[i]]));
        int acc = 0, bits = 0;
        for (int j = 1; j < n_; j++) {
            for (int i = 0; i < j; i++) {
                int a = p.order[i], b = p.order[j];
                acc = (acc << 1) | ((adj_[a] >> b) & 1);
                if (++bits == 8) {
                    bytes.push_back(static_cast<uint8_t>(acc));
                    bits = 0;
                    acc = 0;
                }
            }
        }
        if (bits) bytes.push_back(static_cast<uint8_t>(acc << (8 - bits)));
        return bytes;
    }

    void search(const Partition& p) {
        int k = first_nonsingleton(p);
        if (k < 0) {
            auto bytes = encode(p);
            if (!have_best_ || bytes < best_bytes) {
                best_bytes = std::move(bytes);
                best_order = p.order;
                have_best_ = true;
            } else if (bytes == best_bytes) {
                // Two labelings with identical encodings compose to an automorphism.
                for (int i = 0; i < n_; i++) orbits_.unite(best_order[i], p.order[i]);
            }
            return;
        }
        int lo = p.cell_start[k], hi = p.cell_start[k + 1];
        std::vector<int> tried;
        for (int pos = lo; pos < hi; pos++) {
            int v = p.order[pos];
            bool skip = false;
            for (int u : tried)
                if (orbits_.find(u) == orbits_.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            Partition child = p;
            // Individualize v: cell becomes [v | rest].
            for (int i = lo; i < hi; i++)
                if (child.order[i] == v) {
                    std::rotate(child.order.begin() + lo, child.order.begin() + i,
                                child.order.begin() + i + 1);
                    break;
                }
            child.cell_start.insert(
                std::upper_bound(child.cell_start.begin(), child.cell_start.end(), lo + 1),
                lo + 1);
            refine(child);
            search(child);
        }
    }
};

} // namespace

CanonicalForm canonical_form(const ViewingGraph& g) {
    std::vector<int> colors(g.n(), 0);
    return canonical_form_colored(g, colors);
}

CanonicalForm canonical_form_colored(const ViewingGraph& g, const std::vector<int>& colors) {
    if (g.n() > kMaxN) throw std::domain_error("canonical form limited to n <= 16");
    Searcher s(g.n(), g.adjacency_masks(), colors);
    s.run();
    CanonicalForm f;
    f.bytes = std::move(s.best_bytes);
    return f;
}

CanonicalLabeling canonical_labeling(const ViewingGraph& g) {
    if (g.n() > kMaxN) throw std::domain_error("canonical form limited to n <= 16");
    std::vector<int> colors(g.n(), 0);
    Searcher s(g.n(), g.adjacency_masks(), colors);
    s.run();
    CanonicalLabeling out;
    out.form.bytes = s.best_bytes;
    out.to_canon.assign(g.n(), 0);
    for (int pos = 0; pos < g.n(); pos++) out.to_canon[s.best_order[pos]] = pos;
    return out;
}

CanonicalForm marked_pair_form(const ViewingGraph& g, int u, int v) {
    std::vector<int> colors(g.n(), 0);
    colors.at(u) = 1;
    colors.at(v) = 1;
    return canonical_form_colored(g, colors);
}

ViewingGraph apply_labeling(const ViewingGraph& g, const std::vector<int>& to_canon) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) edges.emplace_back(to_canon[a], to_canon[b]);
    return ViewingGraph(g.n(), std::move(edges));
}

} // namespace vg
