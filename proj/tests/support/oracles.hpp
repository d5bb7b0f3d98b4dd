// Independent brute-force reference implementations used to cross-check the
// library.  Everything here is deliberately written with different algorithms
// than the library uses (subset enumeration, plain backtracking, union-find,
// Bareiss elimination, permutation canonicalization) and must stay free of
// library includes.
#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

using EdgeList = std::vector<std::pair<int, int>>;  // 1-based endpoints

// connectivity via union-find
int components(int p, const EdgeList& edges);
bool connected(int p, const EdgeList& edges);

// bipartiteness by trying all 2^p two-sided vertex assignments (p <= 20)
bool two_colorable(int p, const EdgeList& edges);

// smallest k admitting a proper coloring; plain backtracking in vertex order
int chromatic_number(int p, const EdgeList& edges);

// edges whose removal increases the component count, in input order
EdgeList bridges(int p, const EdgeList& edges);

// every edge subset forming a simple cycle (all touched vertices of degree
// two, support connected), as sorted 0-based slot sets; q <= 20
std::vector<std::vector<int>> cycle_slot_sets(int p, const EdgeList& edges);

// minimum transversals of a hypergraph over 0-based slots by subset
// enumeration; nvars <= 20.  Covers are sorted sets, the list is sorted.
int min_cover_size(std::size_t nvars, const std::vector<std::vector<std::size_t>>& hyperedges);
std::vector<std::vector<std::size_t>> all_min_covers(
    std::size_t nvars, const std::vector<std::vector<std::size_t>>& hyperedges);

// exact integer linear algebra, fraction-free (Bareiss)
using Mat = std::vector<std::vector<long long>>;
int rank(Mat m);
long long det(Mat m);  // square input
bool in_kernel(const Mat& m, const std::vector<long long>& v);
// gcd of all maximal minors of a (rows >= cols) full-column-rank matrix;
// 1 certifies that the column lattice is saturated in Z^rows
long long maximal_minor_gcd(const Mat& m);

// graph isomorphism by exhausting all p! vertex relabelings (p <= 8)
std::uint64_t canonical_key(int p, const EdgeList& edges);
// canonical keys of every connected graph on exactly p labeled vertices
// (so: the isomorphism classes), by scanning all 2^(p choose 2) graphs; p <= 6
std::set<std::uint64_t> connected_class_keys(int p);

}  // namespace oracles
