#include "vgsolve/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace vg {

ViewingGraph::ViewingGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range [0, " + std::to_string(n) + ")");
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool ViewingGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int ViewingGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) d++;
    return d;
}

std::vector<uint32_t> ViewingGraph::adjacency_masks() const {
    if (n_ > 32) throw std::domain_error("adjacency masks require n <= 32");
    std::vector<uint32_t> adj(n_, 0);
    for (const auto& [a, b] : edges_) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    return adj;
}

std::vector<std::vector<int>> ViewingGraph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [a, b] : edges_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Cursor(const std::string& str) : s(str) {}
    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void advance() {
        if (s[pos] == '\n') { line++; col = 1; } else { col++; }
        pos++;
    }
    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    int read_int() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer");
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        advance();
    }
};

ViewingGraph parse_edge_list(const std::string& text, int base) {
    Cursor cur(text);
    cur.skip_ws();
    cur.expect('n', "at start of edge list");
    cur.expect('=', "after 'n'");
    int n = cur.read_int();
    cur.expect(';', "after vertex count");
    std::vector<std::pair<int, int>> edges;
    for (;;) {
        cur.skip_ws();
        while (!cur.eof() && (cur.peek() == '\n' || cur.peek() == ',')) {
            cur.advance();
            cur.skip_ws();
        }
        if (cur.eof()) break;
        int line = cur.line, col = cur.col;
        int a = cur.read_int() - base;
        cur.expect('-', "between edge endpoints");
        int b = cur.read_int() - base;
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw ParseError("vertex out of range", line, col);
        if (a == b) throw ParseError("self-loop", line, col);
        edges.emplace_back(a, b);
    }
    return ViewingGraph(n, std::move(edges));
}

} // namespace

ViewingGraph parse_graph(const std::string& text, GraphFormat format, int label_base) {
    if (format == GraphFormat::Auto) {
        size_t i = text.find_first_not_of(" \t\r\n");
        bool edge_list = i != std::string::npos && text[i] == 'n' &&
                         text.find('=', i) != std::string::npos;
        format = edge_list ? GraphFormat::EdgeList : GraphFormat::Graph6;
    }
    if (format == GraphFormat::EdgeList) return parse_edge_list(text, label_base);
    return from_graph6(text);
}

std::string to_edge_list(const ViewingGraph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << ";";
    bool first = true;
    for (const auto& [a, b] : g.edges()) {
        out << (first ? " " : ", ") << a << "-" << b;
        first = false;
    }
    return out.str();
}

std::string to_graph6(const ViewingGraph& g) {
    if (g.n() >= 63) throw std::domain_error("graph6 encoder limited to n < 63");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    // Upper triangle in column-major order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bits = 0, acc = 0;
    for (int j = 1; j < g.n(); j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

ViewingGraph from_graph6(const std::string& s) {
    std::string t = s;
    const std::string header = ">>graph6<<";
    if (t.rfind(header, 0) == 0) t = t.substr(header.size());
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' ')) t.pop_back();
    size_t start = t.find_first_not_of(" \t");
    if (start == std::string::npos) throw ParseError("empty graph6 string", 1, 1);
    t = t.substr(start);
    auto val = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(t[i]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1, static_cast<int>(i + 1));
        return c - 63;
    };
    int n = val(0);
    if (n == 63) throw ParseError("graph6 decoder limited to n < 63", 1, 1);
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t need = 1 + (nbits + 5) / 6;
    if (t.size() != need)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(need) +
                             " characters, got " + std::to_string(t.size()),
                         1, 1);
    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, bit++) {
            int v = val(1 + bit / 6);
            if ((v >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (size_t b = nbits; b < (need - 1) * 6; b++) {
        int v = val(1 + b / 6);
        if ((v >> (5 - b % 6)) & 1) throw ParseError("nonzero padding in graph6 string", 1, 1);
    }
    return ViewingGraph(std::max(n, 1), std::move(edges));
}

bool is_connected(const ViewingGraph& g) { return component_count(g) == 1; }

int component_count(const ViewingGraph& g) {
    std::vector<int> parent(g.n());
    for (int i = 0; i < g.n(); i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = g.n();
    for (const auto& [a, b] : g.edges()) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            comps--;
        }
    }
    return comps;
}

std::vector<int> component_of(const ViewingGraph& g, int v) {
    auto adj = g.adjacency_lists();
    std::vector<bool> seen(g.n(), false);
    std::vector<int> stack = {v}, out;
    seen[v] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_biconnected(const ViewingGraph& g) {
    if (g.n() <= 2) return is_connected(g);
    if (!is_connected(g)) return false;
    auto adj = g.adjacency_lists();
    std::vector<int> disc(g.n(), -1), low(g.n(), -1);
    int timer = 0;
    bool articulation = false;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : adj[u]) {
            if (disc[v] == -1) {
                children++;
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (parent != -1 && low[v] >= disc[u]) articulation = true;
            } else if (v != parent) {
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) articulation = true;
    };
    dfs(0, -1);
    return !articulation;
}

int degree(const ViewingGraph& g, int v) { return g.degree(v); }

} // namespace vg
