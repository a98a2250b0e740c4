#pragma once

#include <optional>
#include <vector>

#include "reallat/intlinalg.hpp"
#include "reallat/matrix.hpp"

namespace reallat {

namespace detail {

using FGrid = std::vector<std::vector<Scalar>>;

inline FGrid to_fgrid(const Mat& m) {
    FGrid g(m.rows(), std::vector<Scalar>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
    }
    return g;
}

inline Mat from_fgrid(const FGrid& g) {
    int m = static_cast<int>(g.size());
    int n = m == 0 ? 0 : static_cast<int>(g[0].size());
    std::vector<Scalar> e;
    e.reserve(static_cast<size_t>(m) * n);
    for (const auto& row : g) {
        for (const auto& v : row) e.push_back(v);
    }
    return Mat::from_entries(m, n, std::move(e));
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(FGrid& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        Scalar inv = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline Scalar fdet(const Mat& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    detail::FGrid a = detail::to_fgrid(m);
    const int n = m.rows();
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) return Scalar(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Scalar inv = a[c][c].inverse();
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            Scalar f = a[i][c] * inv;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

inline int frank(const Mat& m) {
    detail::FGrid a = detail::to_fgrid(m);
    return static_cast<int>(detail::rref(a).size());
}

// Solve a * x == b for square invertible a.
inline std::optional<Mat> fsolve(const Mat& a, const Mat& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw error("fsolve shape mismatch");
    detail::FGrid g = detail::to_fgrid(Mat::hcat(a, b));
    std::vector<int> piv = detail::rref(g);
    if (static_cast<int>(piv.size()) != a.cols()) return std::nullopt;
    for (int c : piv) {
        if (c >= a.cols()) return std::nullopt;
    }
    Mat full = detail::from_fgrid(g);
    return full.submat(0, a.cols(), a.rows(), b.cols());
}

inline std::optional<Mat> finverse(const Mat& m) {
    return fsolve(m, Mat::identity(m.rows()));
}

// Solve a * x == b where a has full column rank but may have extra rows;
// nullopt when inconsistent.
inline std::optional<Mat> fsolve_tall(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw error("fsolve_tall shape mismatch");
    detail::FGrid g = detail::to_fgrid(Mat::hcat(a, b));
    std::vector<int> piv = detail::rref(g);
    for (int c : piv) {
        if (c >= a.cols()) return std::nullopt;  // a row lives only in the b block
    }
    if (static_cast<int>(piv.size()) != a.cols()) throw error("fsolve_tall: rank-deficient system");
    Mat full = detail::from_fgrid(g);
    return full.submat(0, a.cols(), a.cols(), b.cols());
}

// Canonical kernel basis (columns) over the field: RREF free-variable
// parametrization, free coordinates set to 1 in column order.
inline Mat fkernel(const Mat& m) {
    detail::FGrid a = detail::to_fgrid(m);
    std::vector<int> piv = detail::rref(a);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    std::vector<Scalar> e(static_cast<size_t>(n) * free_cols.size());
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
        int f = free_cols[fc];
        e[static_cast<size_t>(f) * free_cols.size() + fc] = Scalar(1);
        for (size_t pr = 0; pr < piv.size(); ++pr) {
            e[static_cast<size_t>(piv[pr]) * free_cols.size() + fc] = -a[pr][f];
        }
    }
    return Mat::from_entries(n, static_cast<int>(free_cols.size()), std::move(e));
}

// --- rational coordinates for K^n vectors --------------------------------

// K^n -> Q^(2n): rational parts stacked over surd parts (surd block zero for
// plain Q).  Columnwise.
inline Mat rational_coords_columns(const Mat& m) {
    const int n = m.rows(), c = m.cols();
    std::vector<Scalar> e(static_cast<size_t>(2 * n) * c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            e[static_cast<size_t>(i) * c + j] = Scalar(m(i, j).rational_part());
            e[static_cast<size_t>(i + n) * c + j] = Scalar(m(i, j).surd_part());
        }
    }
    return Mat::from_entries(2 * n, c, std::move(e));
}

inline Mat from_rational_coords_columns(const Mat& q, long long d) {
    if (q.rows() % 2 != 0) throw error("rational coordinate block must have even height");
    const int n = q.rows() / 2, c = q.cols();
    std::vector<Scalar> e(static_cast<size_t>(n) * c);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) {
            const mpq_class& rat = q(i, j).rational_part();
            const mpq_class& sur = q(i + n, j).rational_part();
            if (!q(i, j).is_rational() || !q(i + n, j).is_rational()) {
                throw error("rational coordinate block carries surds");
            }
            if (sur != 0 && d == 0) throw error("surd coordinate without discriminant");
            e[static_cast<size_t>(i) * c + j] =
                (sur == 0) ? Scalar(rat) : Scalar::with_surd(rat, sur, d);
        }
    }
    return Mat::from_entries(n, c, std::move(e));
}

struct ScaledInt {
    IMat mat;
    mpz_class den;  // mat == den * original
};

// Clear denominators of an all-rational matrix.
inline ScaledInt to_integer_scaled(const Mat& m) {
    mpz_class den = 1;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational()) throw error("to_integer_scaled needs rational entries");
            mpz_class d = m(i, j).rational_part().get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    }
    std::vector<mpz_class> e(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class q = m(i, j).rational_part() * mpq_class(den);
            e[static_cast<size_t>(i) * m.cols() + j] = q.get_num();
        }
    }
    return {IMat::from_entries(m.rows(), m.cols(), std::move(e)), den};
}

inline Mat from_integer_scaled(const IMat& m, const mpz_class& den) {
    std::vector<Scalar> e(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class q(m(i, j), den);
            q.canonicalize();
            e[static_cast<size_t>(i) * m.cols() + j] = Scalar(q);
        }
    }
    return Mat::from_entries(m.rows(), m.cols(), std::move(e));
}

// Canonical Z-basis of the lattice spanned by the columns of m inside K^n,
// computed as an HNF over the rational coordinates.  Scale-invariant, so the
// result does not depend on the denominator used to reach Z.
inline Mat field_lattice_canonical(const Mat& m) {
    long long d = m.context();
    Mat q = rational_coords_columns(m);
    ScaledInt s = to_integer_scaled(q);
    IMat basis_rows = hnf_row_basis(s.mat.transpose());
    Mat back = from_integer_scaled(basis_rows.transpose(), s.den);
    return from_rational_coords_columns(back, d);
}

inline bool field_lattice_equal(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) return false;
    long long da = a.context(), db = b.context();
    if (da != 0 && db != 0 && da != db) return false;
    return field_lattice_canonical(a) == field_lattice_canonical(b);
}

// Does v (column) lie in the Z-span of the columns of m (all in K^n)?
inline bool field_lattice_member(const Mat& m, const Mat& v) {
    if (v.cols() != 1 || v.rows() != m.rows()) throw error("field_lattice_member shape mismatch");
    long long dm = m.context(), dv = v.context();
    if (dm != 0 && dv != 0 && dm != dv) return false;
    Mat qa = rational_coords_columns(m);
    Mat qv = rational_coords_columns(v);
    Mat joint = Mat::hcat(qa, qv);
    ScaledInt s = to_integer_scaled(joint);
    IMat a = s.mat.submat(0, 0, s.mat.rows(), m.cols());
    IMat b = s.mat.submat(0, m.cols(), s.mat.rows(), 1);
    return in_column_span_z(a, b);
}

}  // namespace reallat
