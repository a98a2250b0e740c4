#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reallat/f2.hpp"
#include "reallat/fieldlinalg.hpp"
#include "reallat/intlinalg.hpp"
#include "reallat/matrix.hpp"
#include "reallat/scalar.hpp"

namespace reallat {

enum class Defect {
    none,
    bad_genus,
    bad_field,
    period_shape,
    period_field_mismatch,
    period_singular,
    glue_shape,
    glue_meets_x_block,
    glue_meets_y_block,
    frame_shape,
    frame_singular,
    involution_shape,
    involution_not_antilinear,
    involution_not_involutive,
    lattice_not_stable,
};

struct Validation {
    bool ok = true;
    Defect defect = Defect::none;
    std::string message;

    static Validation pass() { return {}; }
    static Validation fail(Defect d, std::string msg) { return {false, d, std::move(msg)}; }
};

template <typename T>
struct Checked {
    std::optional<T> value;
    Validation validation;
    bool ok() const { return validation.ok; }
};

template <typename T>
inline T unwrap(Checked<T> c, const char* what) {
    if (!c.ok()) throw error(std::string(what) + ": " + c.validation.message);
    return std::move(*c.value);
}

inline Mat j_matrix(int g) {
    // Multiplication by sqrt(-1) on (re | im) coordinates.
    std::vector<Scalar> e(static_cast<size_t>(2 * g) * (2 * g));
    for (int k = 0; k < g; ++k) {
        e[static_cast<size_t>(k) * 2 * g + (g + k)] = Scalar(-1);
        e[static_cast<size_t>(g + k) * 2 * g + k] = Scalar(1);
    }
    return Mat::from_entries(2 * g, 2 * g, std::move(e));
}

inline IMat imat_from_mat(const Mat& m, const char* what) {
    std::vector<mpz_class> e(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer()) throw error(std::string(what) + ": entry not an integer");
            e[static_cast<size_t>(i) * m.cols() + j] = m(i, j).rational_part().get_num();
        }
    }
    return IMat::from_entries(m.rows(), m.cols(), std::move(e));
}

inline Mat unwrap_solve(const Mat& a, const Mat& b) {
    auto r = fsolve(a, b);
    if (!r) throw error("singular system in an internal solve");
    return *r;
}

inline Validation validate_field(const Field& field) {
    if (field.d == 0) return Validation::pass();
    if (!is_valid_discriminant(field.d)) {
        return Validation::fail(Defect::bad_field,
                                "discriminant must be a squarefree integer >= 2, got " +
                                    std::to_string(field.d));
    }
    return Validation::pass();
}

// The three defining conditions of a split-form real lattice: an invertible
// period matrix (so the plus and minus parts both have full rank g and the
// lattice spans), and a glue group meeting neither coordinate block (so the
// lattice meets the real and imaginary axes exactly in Z^g and i*M).
inline Validation validate_real(int g, const Field& field, const Mat& period,
                                const std::vector<F2Vec>& glue_words) {
    if (g < 1) return Validation::fail(Defect::bad_genus, "g must be >= 1");
    if (Validation v = validate_field(field); !v.ok) return v;
    if (period.rows() != g || period.cols() != g) {
        return Validation::fail(Defect::period_shape, "period matrix must be g x g");
    }
    long long ctx;
    try {
        ctx = period.context();
    } catch (const error&) {
        return Validation::fail(Defect::period_field_mismatch,
                                "period matrix mixes discriminants");
    }
    if (ctx != 0 && ctx != field.d) {
        return Validation::fail(Defect::period_field_mismatch,
                                "period matrix uses sqrt " + std::to_string(ctx) +
                                    " outside the declared field");
    }
    if (fdet(period).is_zero()) {
        return Validation::fail(Defect::period_singular, "period matrix is singular");
    }
    for (const auto& w : glue_words) {
        if (static_cast<int>(w.size()) != 2 * g) {
            return Validation::fail(Defect::glue_shape, "glue word length must be 2g");
        }
        for (unsigned char b : w) {
            if (b > 1) return Validation::fail(Defect::glue_shape, "glue words are bit strings");
        }
    }
    GlueGroup glue = GlueGroup::from_generators(g, glue_words);
    if (glue.meets_x_block()) {
        return Validation::fail(Defect::glue_meets_x_block,
                                "glue group contains a nonzero element with zero y-bits");
    }
    if (glue.meets_y_block()) {
        return Validation::fail(Defect::glue_meets_y_block,
                                "glue group contains a nonzero element with zero x-bits");
    }
    return Validation::pass();
}

// Split normal form of a real lattice in C^g: the real points of the ambient
// are R^g with integral part Z^g, the imaginary part is sqrt(-1)*M with M
// spanned by the period columns, and the glue group records the admissible
// half sums.  Values are canonical: the period columns are the HNF-canonical
// basis of M and the glue basis is reduced echelon with y-bits taken in that
// basis, so equal values mean equal lattices in the fixed frame.
class RealLattice {
public:
    static Checked<RealLattice> create(int g, const Field& field, const Mat& period,
                                       const std::vector<F2Vec>& glue_words) {
        Validation v = validate_real(g, field, period, glue_words);
        if (!v.ok) return {std::nullopt, v};

        Mat canonical = field_lattice_canonical(period);
        // Change of M-basis: period * b == canonical with b integral
        // unimodular; rewrite glue y-bits through its inverse.
        Mat b_field = unwrap(checked_solve(period, canonical), "period basis change");
        IMat b = imat_from_mat(b_field, "period basis change");
        if (!is_unimodular(b)) throw error("period canonicalization is not unimodular");
        IMat b_inv = imat_from_mat(unwrap(checked_inverse(b_field), "period basis inverse"),
                                   "period basis inverse");

        std::vector<F2Vec> rewritten;
        rewritten.reserve(glue_words.size());
        for (const auto& w : glue_words) {
            F2Vec x(w.begin(), w.begin() + g);
            F2Vec y(w.begin() + g, w.end());
            F2Vec ny(g, 0);
            for (int i = 0; i < g; ++i) {
                mpz_class acc = 0;
                for (int j = 0; j < g; ++j) {
                    if (y[j]) acc += b_inv(i, j);
                }
                mpz_class r = acc % 2;
                ny[i] = static_cast<unsigned char>(r < 0 ? (r + 2 != 0) : (r != 0));
            }
            rewritten.push_back(f2_concat(x, ny));
        }

        RealLattice l;
        l.g_ = g;
        l.field_ = field;
        l.period_ = canonical;
        l.glue_ = GlueGroup::from_generators(g, rewritten);
        return {l, Validation::pass()};
    }

    int genus() const { return g_; }
    const Field& field() const { return field_; }
    const Mat& period() const { return period_; }
    const GlueGroup& glue() const { return glue_; }

    friend bool operator==(const RealLattice& a, const RealLattice& b) {
        return a.g_ == b.g_ && a.field_ == b.field_ && a.period_ == b.period_ &&
               a.glue_ == b.glue_;
    }
    friend bool operator!=(const RealLattice& a, const RealLattice& b) { return !(a == b); }

private:
    static Checked<Mat> checked_solve(const Mat& a, const Mat& b) {
        auto r = fsolve(a, b);
        if (!r) return {std::nullopt, Validation::fail(Defect::period_singular, "singular solve")};
        return {*r, Validation::pass()};
    }
    static Checked<Mat> checked_inverse(const Mat& a) {
        auto r = finverse(a);
        if (!r) {
            return {std::nullopt, Validation::fail(Defect::period_singular, "singular inverse")};
        }
        return {*r, Validation::pass()};
    }

    RealLattice() : g_(0) {}

    int g_;
    Field field_;
    Mat period_;
    GlueGroup glue_;
};

// Z-basis of the full lattice, columns in (x | y-in-period-basis)
// coordinates; entries lie in (1/2)Z.  Canonical via HNF of the doubled
// generator stack.
inline Mat generators(const RealLattice& l) {
    const int g = l.genus();
    IMat rows(2 * g + l.glue().dim(), 2 * g);
    {
        std::vector<mpz_class> e(static_cast<size_t>(rows.rows()) * rows.cols());
        for (int i = 0; i < 2 * g; ++i) e[static_cast<size_t>(i) * 2 * g + i] = 2;
        const auto& basis = l.glue().basis();
        for (size_t k = 0; k < basis.size(); ++k) {
            for (int j = 0; j < 2 * g; ++j) {
                e[(2 * g + k) * static_cast<size_t>(2 * g) + j] = basis[k][j];
            }
        }
        rows = IMat::from_entries(rows.rows(), rows.cols(), std::move(e));
    }
    IMat h = hnf_row_basis(rows);
    if (h.rows() != 2 * g) throw error("generator stack lost rank");
    return from_integer_scaled(h.transpose(), 2);
}

// Same basis in ambient (re | im) coordinates: y-part multiplied by the
// period matrix.
inline Mat ambient_generators(const RealLattice& l) {
    const int g = l.genus();
    Mat blk = Mat::block2x2(Mat::identity(g), Mat(g, g), Mat(g, g), l.period());
    return blk * generators(l);
}

// A lattice with an anti-linear descent involution, given by an ambient
// generator matrix p (columns) and the matrix of the involution theta on
// (re | im) coordinates.
class DescendedLattice {
public:
    static Checked<DescendedLattice> create(int g, const Field& field, const Mat& p,
                                            const Mat& theta) {
        if (g < 1) return {std::nullopt, Validation::fail(Defect::bad_genus, "g must be >= 1")};
        if (Validation v = validate_field(field); !v.ok) return {std::nullopt, v};
        if (p.rows() != 2 * g || p.cols() != 2 * g) {
            return {std::nullopt,
                    Validation::fail(Defect::frame_shape, "generator matrix must be 2g x 2g")};
        }
        if (theta.rows() != 2 * g || theta.cols() != 2 * g) {
            return {std::nullopt,
                    Validation::fail(Defect::involution_shape, "involution must be 2g x 2g")};
        }
        for (const Mat* m : {&p, &theta}) {
            long long ctx;
            try {
                ctx = m->context();
            } catch (const error&) {
                return {std::nullopt, Validation::fail(Defect::period_field_mismatch,
                                                       "matrix mixes discriminants")};
            }
            if (ctx != 0 && ctx != field.d) {
                return {std::nullopt, Validation::fail(Defect::period_field_mismatch,
                                                       "matrix uses a surd outside the field")};
            }
        }
        // Anti-linearity forces the block shape [[A, B], [B, -A]].
        Mat a = theta.submat(0, 0, g, g);
        Mat b = theta.submat(0, g, g, g);
        Mat c = theta.submat(g, 0, g, g);
        Mat d = theta.submat(g, g, g, g);
        if (c != b || d != -a) {
            return {std::nullopt, Validation::fail(Defect::involution_not_antilinear,
                                                   "involution does not anticommute with i")};
        }
        if (theta * theta != Mat::identity(2 * g)) {
            return {std::nullopt, Validation::fail(Defect::involution_not_involutive,
                                                   "involution squared is not the identity")};
        }
        if (fdet(p).is_zero()) {
            return {std::nullopt,
                    Validation::fail(Defect::frame_singular, "generator matrix is singular")};
        }
        auto pinv_theta_p = fsolve(p, theta * p);
        if (!pinv_theta_p) {
            return {std::nullopt,
                    Validation::fail(Defect::frame_singular, "generator matrix is singular")};
        }
        IMat t;
        try {
            t = imat_from_mat(*pinv_theta_p, "descent matrix");
        } catch (const error&) {
            return {std::nullopt, Validation::fail(Defect::lattice_not_stable,
                                                   "involution does not preserve the lattice")};
        }
        if (!is_unimodular(t)) {
            return {std::nullopt, Validation::fail(Defect::lattice_not_stable,
                                                   "involution is not unimodular on the lattice")};
        }
        DescendedLattice out;
        out.g_ = g;
        out.field_ = field;
        out.p_ = p;
        out.theta_ = theta;
        out.t_ = t;
        return {out, Validation::pass()};
    }

    int genus() const { return g_; }
    const Field& field() const { return field_; }
    const Mat& frame() const { return p_; }
    const Mat& involution() const { return theta_; }
    const IMat& descent_on_basis() const { return t_; }

private:
    DescendedLattice() : g_(0) {}

    int g_;
    Field field_;
    Mat p_, theta_;
    IMat t_;
};

struct SplitResult {
    RealLattice lattice;
    // Ambient coordinates of the split frame: ambient == frame * (x | y)
    // with x, y the split coordinates.  Columns 0..g-1 are the plus basis,
    // columns g..2g-1 its image under multiplication by sqrt(-1).
    Mat frame;
};

// Split a descended lattice into canonical normal form.  The plus basis is
// the HNF-canonical basis of the fixed lattice over the rational ambient
// coordinates, which makes split invert embed exactly.
inline SplitResult split(const DescendedLattice& dl) {
    const int g = dl.genus();
    IMat t = dl.descent_on_basis();
    IMat id = IMat::identity(2 * g);
    IMat kp = integer_kernel(t - id);
    IMat km = integer_kernel(t + id);
    if (kp.cols() != g || km.cols() != g) {
        throw error("descent eigenlattices do not both have rank g");
    }

    Mat plus_ambient = dl.frame() * kp.to_mat();
    Mat plus_canonical = field_lattice_canonical(plus_ambient);

    Mat minus_ambient = dl.frame() * km.to_mat();
    // Divide by sqrt(-1): (x, y) -> (y, -x); the result lives in the fixed
    // subspace of theta.
    Mat minus_real = -(j_matrix(g) * minus_ambient);

    auto period = fsolve_tall(plus_canonical, minus_real);
    if (!period) throw error("minus part does not lie in the complexified fixed space");

    // Lattice coordinates of the canonical plus basis.
    Mat kp_canonical_f = unwrap_solve(dl.frame(), plus_canonical);
    IMat kp_canonical = imat_from_mat(kp_canonical_f, "plus basis lattice coordinates");

    IMat u2 = IMat::hcat(kp_canonical, km);
    IMat two_id = IMat::from_entries(2 * g, 2 * g, [&] {
        std::vector<mpz_class> e(static_cast<size_t>(2 * g) * (2 * g));
        for (int i = 0; i < 2 * g; ++i) e[static_cast<size_t>(i) * 2 * g + i] = 2;
        return e;
    }());
    auto w = solve_integer(u2, two_id);
    if (!w) throw error("lattice does not lie in half the split sum");
    std::vector<F2Vec> words;
    words.reserve(static_cast<size_t>(2 * g));
    for (int j = 0; j < 2 * g; ++j) {
        F2Vec word(2 * g, 0);
        for (int i = 0; i < 2 * g; ++i) {
            mpz_class r = (*w)(i, j) % 2;
            word[i] = static_cast<unsigned char>(r != 0);
        }
        words.push_back(std::move(word));
    }

    auto lat = RealLattice::create(g, dl.field(), *period, words);
    if (!lat.ok()) throw error("split produced an invalid lattice: " + lat.validation.message);

    Mat frame = Mat::hcat(plus_canonical, j_matrix(g) * plus_canonical);
    return {*lat.value, frame};
}

// Reverse of split: present a real lattice as a descended lattice in its own
// ambient coordinates, with conjugation as the involution.
inline DescendedLattice embed(const RealLattice& l) {
    const int g = l.genus();
    Mat p = ambient_generators(l);
    Mat theta = Mat::block2x2(Mat::identity(g), Mat(g, g), Mat(g, g), -Mat::identity(g));
    return unwrap(DescendedLattice::create(g, l.field(), p, theta), "embed");
}

namespace detail {

// Glue words of an explicit sublattice given by ambient columns, relative to
// plus part Z^g and minus part sqrt(-1) * (period columns).
inline std::vector<F2Vec> glue_words_of_columns(int g, const Mat& period, const Mat& columns) {
    auto period_inv = finverse(period);
    if (!period_inv) throw error("singular period");
    Mat x_part = columns.submat(0, 0, g, columns.cols());
    Mat y_part = *period_inv * columns.submat(g, 0, g, columns.cols());
    std::vector<F2Vec> words;
    for (int j = 0; j < columns.cols(); ++j) {
        F2Vec word(2 * g, 0);
        for (int i = 0; i < g; ++i) {
            Scalar twice_x = Scalar(2) * x_part(i, j);
            Scalar twice_y = Scalar(2) * y_part(i, j);
            if (!twice_x.is_integer() || !twice_y.is_integer()) {
                throw error("sublattice is not inside half the split sum");
            }
            mpz_class rx = twice_x.rational_part().get_num() % 2;
            mpz_class ry = twice_y.rational_part().get_num() % 2;
            word[i] = static_cast<unsigned char>(rx != 0);
            word[g + i] = static_cast<unsigned char>(ry != 0);
        }
        words.push_back(std::move(word));
    }
    return words;
}

}  // namespace detail

// Largest common sublattice with the same plus part: plus stays Z^g, minus
// parts intersect, glue is the image of the intersection.
inline RealLattice common_refinement(const RealLattice& a, const RealLattice& b) {
    if (a.genus() != b.genus()) throw error("refinement requires equal g");
    require_same_field(a.field(), b.field());
    const int g = a.genus();

    // Equal Q-spans of the minus lattices, else the intersection drops rank.
    Mat ratio = unwrap_solve(a.period(), b.period());
    if (!ratio.is_rational()) {
        throw error("refinement requires equal rational spans of the minus parts");
    }

    Mat ga = rational_coords_columns(ambient_generators(a));
    Mat gb = rational_coords_columns(ambient_generators(b));
    ScaledInt sa = to_integer_scaled(Mat::hcat(ga, gb));
    IMat za = sa.mat.submat(0, 0, sa.mat.rows(), 2 * g);
    IMat zb = sa.mat.submat(0, 2 * g, sa.mat.rows(), 2 * g);
    IMat inter = lattice_intersect(za, zb);
    if (inter.cols() != 2 * g) throw error("refinement lost rank");
    Mat columns = from_rational_coords_columns(from_integer_scaled(inter, sa.den), a.field().d);

    Mat pa = rational_coords_columns(a.period());
    Mat pb = rational_coords_columns(b.period());
    ScaledInt sp = to_integer_scaled(Mat::hcat(pa, pb));
    IMat ma = sp.mat.submat(0, 0, sp.mat.rows(), g);
    IMat mb = sp.mat.submat(0, g, sp.mat.rows(), g);
    IMat minter = lattice_intersect(ma, mb);
    if (minter.cols() != g) throw error("minus intersection lost rank");
    Mat new_period = from_rational_coords_columns(from_integer_scaled(minter, sp.den),
                                                  a.field().d);

    std::vector<F2Vec> words = detail::glue_words_of_columns(g, new_period, columns);
    return unwrap(RealLattice::create(g, a.field(), new_period, words), "common refinement");
}

}  // namespace reallat
