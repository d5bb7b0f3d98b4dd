#include "toricgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "toricgraph/errors.hpp"

namespace toricgraph {

namespace {

void check_edge(int p, int u, int v, int line) {
    if (u < 1 || u > p || v < 1 || v > p) {
        throw ParseError(ParseError::Kind::vertex_out_of_range, line,
                         "edge endpoint outside 1.." + std::to_string(p));
    }
    if (u == v) {
        throw ParseError(ParseError::Kind::self_loop, line,
                         "self-loop at vertex " + std::to_string(u));
    }
}

}  // namespace

Graph Graph::from_edges(int p, std::vector<Edge> edges) {
    Graph g;
    g.p_ = p;
    g.edges_ = std::move(edges);
    return g;
}

Graph::Graph(int p, const std::vector<std::pair<int, int>>& endpoints) {
    if (p < 1) throw std::invalid_argument("graph needs at least one vertex");
    p_ = p;
    int next_id = 1;
    for (auto [u, v] : endpoints) {
        check_edge(p, u, v, 0);
        for (const Edge& e : edges_) {
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                            std::to_string(v));
            }
        }
        edges_.push_back({next_id++, u, v});
    }
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    std::optional<int> p;
    std::vector<Edge> edges;
    int next_id = 1;
    while (std::getline(in, line)) {
        ++line_number;
        std::string trimmed = line;
        if (auto hash = trimmed.find('#'); hash != std::string::npos) trimmed.resize(hash);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
            trimmed.pop_back();
        }
        std::size_t start = 0;
        while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) {
            ++start;
        }
        trimmed = trimmed.substr(start);
        if (trimmed.empty()) continue;
        std::istringstream fields(trimmed);
        if (!p) {
            int value;
            if (!(fields >> value) || !(fields >> std::ws).eof() || value < 1) {
                throw ParseError(ParseError::Kind::malformed_line, line_number,
                                 "expected the vertex count, got \"" + trimmed + "\"");
            }
            p = value;
            continue;
        }
        int u, v;
        if (!(fields >> u >> v) || !(fields >> std::ws).eof()) {
            throw ParseError(ParseError::Kind::malformed_line, line_number,
                             "expected \"u v\", got \"" + trimmed + "\"");
        }
        check_edge(*p, u, v, line_number);
        for (const Edge& e : edges) {
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                throw ParseError(ParseError::Kind::duplicate_edge, line_number,
                                 "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                     " already declared as e" + std::to_string(e.id));
            }
        }
        edges.push_back({next_id++, u, v});
    }
    if (!p) {
        throw ParseError(ParseError::Kind::missing_header, line_number,
                         "input has no vertex-count line");
    }
    return from_edges(*p, std::move(edges));
}

Graph Graph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const Edge& Graph::edge_by_id(int id) const {
    for (const Edge& e : edges_) {
        if (e.id == id) return e;
    }
    throw std::invalid_argument("no edge with id e" + std::to_string(id));
}

std::size_t Graph::slot_of_id(int id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id == id) return i;
    }
    throw std::invalid_argument("no edge with id e" + std::to_string(id));
}

bool Graph::has_edge_id(int id) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

Graph Graph::delete_edge(int id) const {
    std::size_t slot = slot_of_id(id);
    std::vector<Edge> remaining = edges_;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(slot));
    return from_edges(p_, std::move(remaining));
}

bool Graph::adjacent(int u, int v) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
    });
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<std::string> Graph::labels() const {
    std::vector<std::string> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back("e" + std::to_string(e.id));
    return out;
}

std::string Graph::str() const {
    std::ostringstream out;
    out << p_ << "\n";
    for (const Edge& e : edges_) out << e.u << " " << e.v << "\n";
    return out.str();
}

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
    // per vertex: (neighbor, edge slot)
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.p()) + 1);
    for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
        const Edge& e = g.edges()[slot];
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<int>(slot)});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<int>(slot)});
    }
    return adj;
}

}  // namespace

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> color(static_cast<std::size_t>(g.p()) + 1, 0);
    Bipartition out;
    for (int start = 1; start <= g.p(); ++start) {
        if (color[static_cast<std::size_t>(start)] != 0) continue;
        color[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, slot] : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == 0) {
                    color[static_cast<std::size_t>(w)] = -color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 1; v <= g.p(); ++v) {
        (color[static_cast<std::size_t>(v)] == 1 ? out.side_a : out.side_b).push_back(v);
    }
    return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<int> bridges(const Graph& g) {
    auto adj = adjacency(g);
    int n = g.p();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent_slot) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++timer;
        for (auto [w, slot] : adj[static_cast<std::size_t>(v)]) {
            if (slot == parent_slot) continue;
            if (disc[static_cast<std::size_t>(w)] != 0) {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            } else {
                dfs(w, slot);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(v)]) {
                    out.push_back(g.edges()[static_cast<std::size_t>(slot)].id);
                }
            }
        }
    };
    for (int v = 1; v <= n; ++v) {
        if (disc[static_cast<std::size_t>(v)] == 0) dfs(v, -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 1; v <= g.p(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::vector<int>> components(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<bool> seen(static_cast<std::size_t>(g.p()) + 1, false);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= g.p(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, slot] : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> renumber(static_cast<std::size_t>(g.p()) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > g.p()) {
            throw std::invalid_argument("induced subgraph vertex out of range");
        }
        renumber[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int u = renumber[static_cast<std::size_t>(e.u)];
        int v = renumber[static_cast<std::size_t>(e.v)];
        if (u != 0 && v != 0) edges.push_back({e.id, u, v});
    }
    return Graph::from_edges(static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace toricgraph
