#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracles {
namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool coloring_extends(int v, int p, int k, const EdgeList& edges, std::vector<int>& color) {
    if (v > p) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (const auto& [a, b] : edges) {
            int other = a == v ? b : (b == v ? a : 0);
            if (other != 0 && other < v && color[static_cast<std::size_t>(other)] == c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            color[static_cast<std::size_t>(v)] = c;
            if (coloring_extends(v + 1, p, k, edges, color)) return true;
        }
    }
    color[static_cast<std::size_t>(v)] = 0;
    return false;
}

int pair_index(int i, int j) {  // 0-based, i < j
    return j * (j - 1) / 2 + i;
}

}  // namespace

int components(int p, const EdgeList& edges) {
    UnionFind uf(p + 1);
    for (const auto& [u, v] : edges) uf.unite(u, v);
    int count = 0;
    for (int v = 1; v <= p; ++v)
        if (uf.find(v) == v) ++count;
    return count;
}

bool connected(int p, const EdgeList& edges) { return components(p, edges) <= 1; }

bool two_colorable(int p, const EdgeList& edges) {
    if (p > 20) throw std::invalid_argument("two_colorable oracle: p too large");
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        bool proper = true;
        for (const auto& [u, v] : edges) {
            if (((mask >> (u - 1)) & 1u) == ((mask >> (v - 1)) & 1u)) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
    }
    return false;
}

int chromatic_number(int p, const EdgeList& edges) {
    if (p == 0) return 0;
    for (int k = 1; k <= p; ++k) {
        std::vector<int> color(static_cast<std::size_t>(p) + 1, 0);
        if (coloring_extends(1, p, k, edges, color)) return k;
    }
    return p;
}

EdgeList bridges(int p, const EdgeList& edges) {
    EdgeList out;
    int base = components(p, edges);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        EdgeList rest;
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (j != i) rest.push_back(edges[j]);
        if (components(p, rest) > base) out.push_back(edges[i]);
    }
    return out;
}

std::vector<std::vector<int>> cycle_slot_sets(int p, const EdgeList& edges) {
    std::size_t q = edges.size();
    if (q > 20) throw std::invalid_argument("cycle oracle: too many edges");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(p) + 1, 0);
        EdgeList sub;
        for (std::size_t j = 0; j < q; ++j) {
            if ((mask >> j) & 1u) {
                sub.push_back(edges[j]);
                ++deg[static_cast<std::size_t>(edges[j].first)];
                ++deg[static_cast<std::size_t>(edges[j].second)];
            }
        }
        bool degree_two = true;
        int touched = 0;
        for (int v = 1; v <= p; ++v) {
            if (deg[static_cast<std::size_t>(v)] == 0) continue;
            ++touched;
            if (deg[static_cast<std::size_t>(v)] != 2) {
                degree_two = false;
                break;
            }
        }
        if (!degree_two || touched == 0) continue;
        // connected on its support: contract everything, expect one class
        UnionFind uf(p + 1);
        for (const auto& [u, v] : sub) uf.unite(u, v);
        int roots = 0;
        for (int v = 1; v <= p; ++v)
            if (deg[static_cast<std::size_t>(v)] > 0 && uf.find(v) == v) ++roots;
        if (roots != 1) continue;
        std::vector<int> slots;
        for (std::size_t j = 0; j < q; ++j)
            if ((mask >> j) & 1u) slots.push_back(static_cast<int>(j));
        out.push_back(std::move(slots));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {
bool covers(std::uint32_t mask, const std::vector<std::vector<std::size_t>>& hyperedges) {
    for (const auto& h : hyperedges) {
        bool hit = false;
        for (std::size_t s : h) {
            if ((mask >> s) & 1u) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}
}  // namespace

int min_cover_size(std::size_t nvars, const std::vector<std::vector<std::size_t>>& hyperedges) {
    if (nvars > 20) throw std::invalid_argument("cover oracle: too many variables");
    for (const auto& h : hyperedges)
        if (h.empty()) throw std::invalid_argument("cover oracle: empty hyperedge");
    int best = static_cast<int>(nvars) + 1;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask)
        if (covers(mask, hyperedges)) best = std::min(best, static_cast<int>(__builtin_popcount(mask)));
    return best;
}

std::vector<std::vector<std::size_t>> all_min_covers(
    std::size_t nvars, const std::vector<std::vector<std::size_t>>& hyperedges) {
    int best = min_cover_size(nvars, hyperedges);
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        if (__builtin_popcount(mask) != best || !covers(mask, hyperedges)) continue;
        std::vector<std::size_t> cover;
        for (std::size_t s = 0; s < nvars; ++s)
            if ((mask >> s) & 1u) cover.push_back(s);
        out.push_back(std::move(cover));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int rank(Mat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            long long g = gcd_ll(m[i][c], m[r][c]);
            long long fi = m[r][c] / g, fr = m[i][c] / g;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * fi - m[r][j] * fr;
        }
        ++r;
    }
    return static_cast<int>(r);
}

long long det(Mat m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det oracle: not square");
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

bool in_kernel(const Mat& m, const std::vector<long long>& v) {
    for (const auto& row : m) {
        long long s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
        if (s != 0) return false;
    }
    return true;
}

long long maximal_minor_gcd(const Mat& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    if (cols == 0 || rows < cols) throw std::invalid_argument("minor gcd oracle: need rows >= cols > 0");
    std::vector<std::size_t> pick(cols);
    std::iota(pick.begin(), pick.end(), 0);
    long long g = 0;
    while (true) {
        Mat sub(cols, std::vector<long long>(cols));
        for (std::size_t i = 0; i < cols; ++i)
            for (std::size_t j = 0; j < cols; ++j) sub[i][j] = m[pick[i]][j];
        g = gcd_ll(g, det(sub));
        // next combination of row indices
        std::size_t i = cols;
        while (i > 0 && pick[i - 1] == rows - cols + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < cols; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

std::uint64_t canonical_key(int p, const EdgeList& edges) {
    if (p > 8) throw std::invalid_argument("canonical key oracle: p too large");
    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t key = 0;
        for (const auto& [u, v] : edges) {
            int a = perm[static_cast<std::size_t>(u - 1)];
            int b = perm[static_cast<std::size_t>(v - 1)];
            if (a > b) std::swap(a, b);
            key |= 1ull << pair_index(a, b);
        }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::set<std::uint64_t> connected_class_keys(int p) {
    if (p < 1 || p > 6) throw std::invalid_argument("class keys oracle: p out of range");
    int pairs = p * (p - 1) / 2;
    std::set<std::uint64_t> keys;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        EdgeList edges;
        int idx = 0;
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                if ((mask >> idx) & 1u) edges.emplace_back(i + 1, j + 1);
        if (!connected(p, edges)) continue;
        keys.insert(canonical_key(p, edges));
    }
    return keys;
}

}  // namespace oracles
