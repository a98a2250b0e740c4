#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reallat/matrix.hpp"

namespace reallat {

namespace detail {

using ZGrid = std::vector<std::vector<mpz_class>>;

inline ZGrid to_grid(const IMat& m) {
    ZGrid g(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
    }
    return g;
}

inline IMat from_grid(const ZGrid& g) {
    int m = static_cast<int>(g.size());
    int n = m == 0 ? 0 : static_cast<int>(g[0].size());
    std::vector<mpz_class> e;
    e.reserve(static_cast<size_t>(m) * n);
    for (const auto& row : g) {
        for (const auto& v : row) e.push_back(v);
    }
    return IMat::from_entries(m, n, std::move(e));
}

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline void row_axpy(ZGrid& g, int dst, int src, const mpz_class& c) {
    if (c == 0) return;
    auto& d = g[dst];
    const auto& s = g[src];
    for (size_t j = 0; j < d.size(); ++j) d[j] -= c * s[j];
}

}  // namespace detail

struct HnfResult {
    IMat h;  // row Hermite normal form, zero rows at the bottom
    IMat u;  // unimodular, h == u * m
};

// Row-style HNF: pivots positive and strictly right-down, entries above each
// pivot reduced into [0, pivot).  Deterministic pivot choice (smallest
// absolute value, then lowest row index) fixes the transformation too.
inline HnfResult hnf(const IMat& m) {
    using namespace detail;
    ZGrid a = to_grid(m);
    ZGrid u = to_grid(IMat::identity(m.rows()));
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Chip away at column c below row r until one nonzero entry remains.
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                if (best < 0 || cmp(abs(a[i][c]), abs(a[best][c])) < 0) best = i;
            }
            if (best < 0) break;  // column empty below r
            if (best != r) {
                std::swap(a[best], a[r]);
                std::swap(u[best], u[r]);
            }
            if (a[r][c] < 0) {
                for (auto& v : a[r]) v = -v;
                for (auto& v : u[r]) v = -v;
            }
            bool dirty = false;
            for (int i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                mpz_class q = floor_div(a[i][c], a[r][c]);
                row_axpy(a, i, r, q);
                row_axpy(u, i, r, q);
                if (a[i][c] != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (a[r][c] == 0) continue;
        for (int i = 0; i < r; ++i) {
            mpz_class q = floor_div(a[i][c], a[r][c]);
            row_axpy(a, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    return {from_grid(a), from_grid(u)};
}

// Canonical basis of the lattice generated by the rows: HNF with zero rows
// dropped.
inline IMat hnf_row_basis(const IMat& rows) {
    IMat h = hnf(rows).h;
    int rank = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < h.cols(); ++j) {
            if (h(i, j) != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) rank = i + 1;
    }
    return h.submat(0, 0, rank, h.cols());
}

struct SnfResult {
    IMat d;  // diagonal, d1 | d2 | ..., zeros trailing
    IMat u;  // unimodular
    IMat v;  // unimodular, d == u * m * v
};

inline SnfResult snf(const IMat& m) {
    using namespace detail;
    ZGrid a = to_grid(m);
    ZGrid u = to_grid(IMat::identity(m.rows()));
    ZGrid v = to_grid(IMat::identity(m.cols()));
    const int rows = m.rows(), cols = m.cols();

    auto col_axpy = [&](ZGrid& g, int dst, int src, const mpz_class& c) {
        if (c == 0) return;
        for (auto& row : g) row[dst] -= c * row[src];
    };
    auto col_swap = [&](ZGrid& g, int x, int y) {
        for (auto& row : g) std::swap(row[x], row[y]);
    };
    auto col_neg = [&](ZGrid& g, int x) {
        for (auto& row : g) row[x] = -row[x];
    };

    int t = 0;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        if (pi != t) {
            std::swap(a[pi], a[t]);
            std::swap(u[pi], u[t]);
        }
        if (pj != t) {
            col_swap(a, pj, t);
            col_swap(v, pj, t);
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }

        bool changed = false;
        for (int i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            mpz_class q = floor_div(a[i][t], a[t][t]);
            row_axpy(a, i, t, q);
            row_axpy(u, i, t, q);
            if (a[i][t] != 0) changed = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            mpz_class q = floor_div(a[t][j], a[t][t]);
            col_axpy(a, j, t, q);
            col_axpy(v, j, t, q);
            if (a[t][j] != 0) changed = true;
        }
        if (changed) continue;

        // Row and column are clear; enforce divisibility on the remainder.
        bool divisible = true;
        for (int i = t + 1; i < rows && divisible; ++i) {
            for (int j = t + 1; j < cols && divisible; ++j) {
                if (a[i][j] % a[t][t] != 0) {
                    row_axpy(a, t, i, mpz_class(-1));
                    row_axpy(u, t, i, mpz_class(-1));
                    divisible = false;
                }
            }
        }
        if (divisible) ++t;
    }
    (void)col_neg;
    return {from_grid(a), from_grid(u), from_grid(v)};
}

inline std::vector<mpz_class> invariant_factors(const IMat& m) {
    IMat d = snf(m).d;
    std::vector<mpz_class> f;
    int k = std::min(d.rows(), d.cols());
    for (int i = 0; i < k; ++i) {
        if (d(i, i) != 0) f.push_back(d(i, i));
    }
    return f;
}

// Exact determinant, fraction-free Bareiss elimination.
inline mpz_class idet(const IMat& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    detail::ZGrid a = detail::to_grid(m);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline bool is_unimodular(const IMat& m) {
    if (!m.is_square()) return false;
    mpz_class d = idet(m);
    return d == 1 || d == -1;
}

// Saturated kernel of the column action v -> m*v, returned as HNF-canonical
// columns.
inline IMat integer_kernel(const IMat& m) {
    HnfResult r = hnf(m.transpose());
    int rank = 0;
    for (int i = 0; i < r.h.rows(); ++i) {
        bool zero = true;
        for (int j = 0; j < r.h.cols(); ++j) {
            if (r.h(i, j) != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) rank = i + 1;
    }
    int dim = m.cols() - rank;
    IMat basis_rows = r.u.submat(rank, 0, dim, m.cols());
    return hnf_row_basis(basis_rows).transpose();
}

// Solve m * x == b over the integers, columnwise; nullopt when any column has
// no integral solution.
inline std::optional<IMat> solve_integer(const IMat& m, const IMat& b) {
    if (m.rows() != b.rows()) throw error("solve_integer shape mismatch");
    HnfResult r = hnf(m.transpose());
    // m * x = b  <=>  (h^T) y = b with x = u^T y, h = u m^T.
    IMat c = r.h.transpose();  // m.rows() x m.cols(), column-staircase
    const int n = m.cols();
    std::vector<int> pivot_row(n, -1);
    {
        int prev = -1;
        for (int j = 0; j < n; ++j) {
            int p = -1;
            for (int i = prev + 1; i < c.rows(); ++i) {
                if (c(i, j) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) break;
            pivot_row[j] = p;
            prev = p;
        }
    }
    std::vector<mpz_class> ye(static_cast<size_t>(n) * b.cols());
    for (int col = 0; col < b.cols(); ++col) {
        std::vector<mpz_class> y(n, 0);
        for (int j = 0; j < n; ++j) {
            int p = pivot_row[j];
            if (p < 0) break;
            mpz_class acc = b(p, col);
            for (int k = 0; k < j; ++k) acc -= c(p, k) * y[k];
            if (acc % c(p, j) != 0) return std::nullopt;
            y[j] = acc / c(p, j);
        }
        // Verify in full: non-pivot rows must come out right as well.
        for (int i = 0; i < c.rows(); ++i) {
            mpz_class acc = 0;
            for (int j = 0; j < n; ++j) acc += c(i, j) * y[j];
            if (acc != b(i, col)) return std::nullopt;
        }
        for (int j = 0; j < n; ++j) ye[static_cast<size_t>(j) * b.cols() + col] = y[j];
    }
    IMat y = IMat::from_entries(n, b.cols(), std::move(ye));
    return r.u.transpose() * y;
}

inline bool in_column_span_z(const IMat& m, const IMat& b) {
    return solve_integer(m, b).has_value();
}

// Intersection of the column lattices of a and b (sublattices of Z^n),
// HNF-canonical columns.
inline IMat lattice_intersect(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows()) throw error("lattice_intersect ambient mismatch");
    IMat k = integer_kernel(IMat::hcat(a, -b));
    IMat top = k.submat(0, 0, a.cols(), k.cols());
    IMat gens = a * top;
    return hnf_row_basis(gens.transpose()).transpose();
}

// Equality of column lattices.
inline bool column_lattice_equal(const IMat& a, const IMat& b) {
    if (a.rows() != b.rows()) return false;
    return hnf_row_basis(a.transpose()) == hnf_row_basis(b.transpose());
}

}  // namespace reallat
