#include "toricgraph/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace toricgraph {

IncidenceMatrix incidence_matrix(const Graph& g) {
    IncidenceMatrix M;
    M.rows = g.p();
    M.cols = g.q();
    M.m.assign(static_cast<std::size_t>(M.rows), std::vector<long long>(M.cols, 0));
    for (std::size_t slot = 0; slot < g.edges().size(); ++slot) {
        const Edge& e = g.edges()[slot];
        M.m[static_cast<std::size_t>(e.u - 1)][slot] = 1;
        M.m[static_cast<std::size_t>(e.v - 1)][slot] = 1;
    }
    return M;
}

IntegerKernel integer_kernel(const IncidenceMatrix& M) {
    int p = M.rows, q = M.cols;
    auto A = M.m;
    // transformation matrix, tracked column-wise
    std::vector<std::vector<long long>> U(static_cast<std::size_t>(q),
                                          std::vector<long long>(static_cast<std::size_t>(q), 0));
    for (int j = 0; j < q; ++j) U[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;

    auto col_axpy = [&](int target, int source, long long t) {  // col_target -= t * col_source
        for (int r = 0; r < p; ++r) {
            A[static_cast<std::size_t>(r)][static_cast<std::size_t>(target)] -=
                t * A[static_cast<std::size_t>(r)][static_cast<std::size_t>(source)];
        }
        for (int r = 0; r < q; ++r) {
            U[static_cast<std::size_t>(r)][static_cast<std::size_t>(target)] -=
                t * U[static_cast<std::size_t>(r)][static_cast<std::size_t>(source)];
        }
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < p; ++r) {
            std::swap(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      A[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
        }
        for (int r = 0; r < q; ++r) {
            std::swap(U[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                      U[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)]);
        }
    };
    auto col_negate = [&](int j) {
        for (int r = 0; r < p; ++r) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= -1;
        for (int r = 0; r < q; ++r) U[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= -1;
    };

    int c = 0;
    for (int r = 0; r < p && c < q; ++r) {
        while (true) {
            int best = -1, count = 0;
            for (int j = c; j < q; ++j) {
                long long a = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (a == 0) continue;
                ++count;
                if (best < 0 ||
                    std::llabs(a) <
                        std::llabs(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(best)])) {
                    best = j;
                }
            }
            if (count == 0) break;
            if (count == 1) {
                col_swap(best, c);
                if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] < 0) col_negate(c);
                ++c;
                break;
            }
            long long pivot = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(best)];
            for (int j = c; j < q; ++j) {
                if (j == best) continue;
                long long a = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (a != 0) col_axpy(j, best, a / pivot);
            }
        }
    }

    IntegerKernel out;
    out.rank = c;
    for (int j = c; j < q; ++j) {
        std::vector<long long> v(static_cast<std::size_t>(q));
        for (int r = 0; r < q; ++r) {
            v[static_cast<std::size_t>(r)] = U[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

int matrix_rank(const IncidenceMatrix& M) { return integer_kernel(M).rank; }

std::vector<std::vector<long long>> integer_kernel_basis(const IncidenceMatrix& M) {
    return integer_kernel(M).basis;
}

}  // namespace toricgraph
