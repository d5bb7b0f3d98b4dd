#pragma once

#include <vector>

#include "toricgraph/graph.hpp"

namespace toricgraph {

// Exponent matrix of the edge map: column j has two 1s, at the endpoints of
// the j-th edge slot.
struct IncidenceMatrix {
    int rows = 0;  // vertices
    int cols = 0;  // edges
    std::vector<std::vector<long long>> m;
};

IncidenceMatrix incidence_matrix(const Graph& g);

struct IntegerKernel {
    int rank = 0;
    std::vector<std::vector<long long>> basis;  // lattice basis of {u : Mu = 0}
};

// Unimodular column reduction; the kernel equals the columns of the
// transformation matrix over the zero columns of the echelon form, so the
// result is a basis of the full (saturated) kernel lattice.
IntegerKernel integer_kernel(const IncidenceMatrix& M);

int matrix_rank(const IncidenceMatrix& M);
std::vector<std::vector<long long>> integer_kernel_basis(const IncidenceMatrix& M);

}  // namespace toricgraph
