#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toricgraph/binomial.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/lattice.hpp"

namespace toricgraph {

// Kernel of the edge map: computed by saturating the lattice-basis binomial
// ideal at every variable.  Prime, so equal to its own saturation; no
// generators <=> the zero ideal.
BinomialIdeal toric_ideal(const Graph& g, const BuchbergerOptions& options = {});

// A binomial of the toric ideal together with the closed-walk edge multiset
// it encodes (edge id, multiplicity = |combined exponent|).
struct WalkBinomial {
    Binomial binomial;
    std::vector<std::pair<int, int>> walk_edges;
};

struct GraverOptions {
    int edge_cap = 24;  // guards the [-2,2]^q kernel-box enumeration
};

// The set of primitive binomials (a universal Groebner basis), canonically
// sorted by (degree, term order).  Kernel-box backend: enumerate kernel
// vectors with entries in [-2,2] (complete for primitives, whose per-edge
// exponents never exceed 2), then filter to the domination-minimal ones.
std::vector<WalkBinomial> graver_basis(const Graph& g, const GraverOptions& options = {});

// Same set through the Lawrence lifting, whose reduced Groebner basis under
// any order is exactly the Graver basis; the two backends must agree.
std::vector<WalkBinomial> graver_basis_lawrence(const Graph& g,
                                                const BuchbergerOptions& options = {});

// True iff no pool element other than b itself divides b termwise in either
// orientation.
bool primitive_check(const Binomial& b, const std::vector<Binomial>& pool);

enum class PrimitiveShape { even_cycle, contains_two_edge_disjoint_odd_cycles };

// Inspects the support subgraph of a primitive binomial; anything outside
// the dichotomy raises StructuralViolation.
PrimitiveShape classify_primitive_subgraph(const WalkBinomial& w, const Graph& g);

// Explicit closed even walk (vertex sequence, first == last) whose
// odd-position edges multiply to the plus side and even-position edges to
// the minus side.
std::vector<int> materialize_walk(const WalkBinomial& w, const Graph& g);

// Minimal monomial generators of the initial ideal of the toric ideal.
std::vector<Monomial> initial_ideal(const Graph& g, const MonomialOrder& order,
                                    const BuchbergerOptions& options = {});

// Height both ways: the closed form q - p (+1 per bipartite component) and
// the height of the reference-order initial ideal.  Disagreement raises
// StructuralViolation.
struct HeightToric {
    int formula = 0;
    int degeneration = 0;
    bool agree() const { return formula == degeneration; }
};
HeightToric height_toric(const Graph& g, const BuchbergerOptions& options = {});

// For connected graphs with zero toric ideal: a tree, or a tree plus one
// edge closing an odd cycle.
enum class ZeroIdealStructure { tree, unicyclic_odd, nonzero_ideal };
ZeroIdealStructure zero_ideal_structure(const Graph& g);

// Macaulay2 script reconstructing the edge map and asking for the toric
// ideal and a Groebner basis, for offline cross-checking.
std::string export_m2(const Graph& g);

}  // namespace toricgraph
