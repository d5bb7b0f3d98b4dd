#pragma once

#include <optional>
#include <vector>

#include "toricgraph/binomial.hpp"
#include "toricgraph/graph.hpp"
#include "toricgraph/ideal.hpp"
#include "toricgraph/order.hpp"

namespace toricgraph {

// One reduced-basis element written as y^d * q + r with y not dividing q.
// r is absent when the element equals y^d * q; otherwise the element is
// y^d * q - r.
struct KmyGbElement {
    Binomial element;
    int d = 0;
    Binomial q;
    std::optional<Monomial> r;
};

struct KMYDecomposition {
    std::size_t y = 0;
    MonomialOrder order;
    BinomialIdeal gb;                // reduced basis of the input ideal
    std::vector<KmyGbElement> split;
    BinomialIdeal C;                 // all q_i; the listed set is a Groebner basis
    BinomialIdeal N;                 // q_i with d_i = 0
    std::vector<Binomial> init_y;    // y^{d_i} q_i
    bool degenerate = false;

    KMYDecomposition(std::size_t nvars)
        : order(reference_order(nvars)),
          gb(BinomialIdeal::zero(nvars)),
          C(BinomialIdeal::zero(nvars)),
          N(BinomialIdeal::zero(nvars)) {}
};

// Splits the reduced basis under a y-compatible order.  Degeneracy: unit in
// C, or (monomial ideals) equal radicals by squarefree reduction, or
// (binomial case, where inputs here are prime) C = N as ideals.
KMYDecomposition kmy_decompose(const BinomialIdeal& ideal, std::size_t y,
                               const MonomialOrder& order, const BuchbergerOptions& options = {});

// The combinatorial criterion: y lies in no primitive binomial, decided
// through its certified equivalent (the reduced basis under a y-top order
// avoids y).
bool is_degenerate_toric(const Graph& g, int edge_id, const BuchbergerOptions& options = {});

// N of the decomposition at e, restricted to the remaining variables,
// equals the toric ideal of the deleted graph; also checks the induced
// initial-ideal claim (the e-free minimal generators generate the initial
// ideal downstairs).
bool deletion_identity_check(const Graph& g, int edge_id, const BuchbergerOptions& options = {});

// Least-indexed edge that is not a bridge and lies in a primitive binomial.
int select_deletion_edge(const Graph& g, const BuchbergerOptions& options = {});

struct DeletionStep {
    int edge_id = 0;
    bool degenerate = false;  // steps pick nondegenerate edges, so always false
};

// Deletes nondegenerate edges until the toric ideal vanishes, recursing into
// components when a deletion disconnects; the step count equals the height.
std::vector<DeletionStep> deletion_sequence(const Graph& g, const BuchbergerOptions& options = {});

// height(C) = height(I) = height(N) + 1 for a nondegenerate edge, all three
// from leading terms of the recorded bases.
bool height_chain_check(const Graph& g, int edge_id, const MonomialOrder& order,
                        const BuchbergerOptions& options = {});

// Deleting a nondegenerate edge of a non-bipartite graph keeps it
// non-bipartite.
bool bipartite_preservation_check(const Graph& g, int edge_id,
                                  const BuchbergerOptions& options = {});

// For degenerate y: the reduced basis avoids y and C = N = I.
bool degenerate_gb_avoids_y_check(const Graph& g, int edge_id, const MonomialOrder& order,
                                  const BuchbergerOptions& options = {});

}  // namespace toricgraph
