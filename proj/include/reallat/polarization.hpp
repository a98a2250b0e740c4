#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "reallat/fieldlinalg.hpp"
#include "reallat/lattice.hpp"

namespace reallat {

// Hermitian form on the complexified space in the split frame, stored as the
// matrix H(e_j, e_k) = re + sqrt(-1) * im.  Hermitian means re symmetric and
// im antisymmetric; H is linear in the first argument.
struct HermitianForm {
    Mat re;
    Mat im;
};

inline HermitianForm s_to_h(const Mat& s) {
    if (!s.is_square() || !s.is_symmetric()) throw error("form matrix must be symmetric");
    return {s, Mat(s.rows(), s.cols())};
}

inline bool theta_compatible(const HermitianForm& h) { return h.im.is_zero(); }

inline Mat h_to_s(const HermitianForm& h) {
    if (!theta_compatible(h)) {
        throw error("form is not compatible with conjugation: its alternating part "
                    "does not vanish on the real points");
    }
    return h.re;
}

// Matrix of E = im H on ambient (re | im) coordinates.
inline Mat e_matrix(const HermitianForm& h) {
    return Mat::block2x2(h.im, -h.re, h.re, h.im);
}

inline Mat e_gram(const RealLattice& l, const HermitianForm& h) {
    Mat p = ambient_generators(l);
    return p.transpose() * e_matrix(h) * p;
}

inline bool e_integral(const RealLattice& l, const HermitianForm& h) {
    return e_gram(l, h).is_integral();
}

// H'(u, v) = H(u, v) + conj(H(theta u, theta v)); in the split frame this is
// (re, im) -> (2 re, 0), which is compatible with conjugation by construction.
inline HermitianForm symmetrize(const RealLattice& l, const HermitianForm& h) {
    if (!e_integral(l, h)) throw error("alternating part is not integral on the lattice");
    return {Scalar(2) * h.re, Mat(h.re.rows(), h.re.cols())};
}

// Exact positive definiteness via leading principal minors.
inline bool is_positive_definite(const Mat& s) {
    if (!s.is_square() || !s.is_symmetric()) return false;
    for (int k = 1; k <= s.rows(); ++k) {
        if (fdet(s.submat(0, 0, k, k)).sign() <= 0) return false;
    }
    return true;
}

// Characteristic polynomial coefficients c[0..n] with
// det(x I - m) = sum c[k] x^(n-k), c[0] = 1 (Faddeev-LeVerrier).
inline std::vector<Scalar> char_poly(const Mat& m) {
    if (!m.is_square()) throw error("characteristic polynomial of a non-square matrix");
    const int n = m.rows();
    std::vector<Scalar> c(static_cast<size_t>(n) + 1);
    c[0] = Scalar(1);
    Mat nk(n, n);
    for (int k = 1; k <= n; ++k) {
        Mat shifted(n, n);
        {
            std::vector<Scalar> e = nk.entries_copy();
            for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] += c[k - 1];
            shifted = Mat::from_entries(n, n, std::move(e));
        }
        nk = m * shifted;
        Scalar tr;
        for (int i = 0; i < n; ++i) tr += nk(i, i);
        c[k] = -(tr / Scalar(k));
    }
    return c;
}

// A symmetric matrix over a real quadratic field has all-real spectrum; it is
// positive semidefinite exactly when the characteristic coefficients
// alternate in sign: (-1)^k c[k] >= 0.
inline bool is_positive_semidefinite(const Mat& s) {
    if (!s.is_square() || !s.is_symmetric()) return false;
    std::vector<Scalar> c = char_poly(s);
    for (size_t k = 1; k < c.size(); ++k) {
        int want = (k % 2 == 0) ? 1 : -1;
        int got = c[k].sign();
        if (got != 0 && got != want) return false;
    }
    return true;
}

inline bool verify_polarization(const RealLattice& l, const Mat& s) {
    if (s.rows() != l.genus() || s.cols() != l.genus()) {
        throw error("form shape does not match the lattice");
    }
    long long ctx = s.context();
    if (ctx != 0 && ctx != l.field().d) throw error("form uses a surd outside the field");
    if (!s.is_symmetric()) return false;
    if (!is_positive_definite(s)) return false;
    return e_integral(l, {s, Mat(s.rows(), s.cols())});
}

namespace detail {

// Coordinates for symmetric matrices over the field as a rational vector
// space: entries (i <= j) in lexicographic order, each contributing its
// rational part and, when the field is irrational, its surd part.
inline int sym_coord_count(int g, long long d) {
    int pairs = g * (g + 1) / 2;
    return d == 0 ? pairs : 2 * pairs;
}

inline Mat sym_from_coords(int g, long long d, const Mat& coords) {
    std::vector<Scalar> e(static_cast<size_t>(g) * g);
    int t = 0;
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) {
            Scalar v;
            if (d == 0) {
                v = coords(t++, 0);
            } else {
                Scalar rat = coords(t++, 0);
                Scalar sur = coords(t++, 0);
                v = rat + sur * Scalar::sqrt_of(d);
            }
            e[static_cast<size_t>(i) * g + j] = v;
            e[static_cast<size_t>(j) * g + i] = v;
        }
    }
    return Mat::from_entries(g, g, std::move(e));
}

inline Mat sym_to_coords(int g, long long d, const Mat& s) {
    Mat coords(sym_coord_count(g, d), 1);
    std::vector<Scalar> e(static_cast<size_t>(coords.rows()));
    int t = 0;
    for (int i = 0; i < g; ++i) {
        for (int j = i; j < g; ++j) {
            if (d == 0) {
                if (!s(i, j).is_rational()) throw error("surd entry over the rational field");
                e[t++] = Scalar(s(i, j).rational_part());
            } else {
                e[t++] = Scalar(s(i, j).rational_part());
                e[t++] = Scalar(s(i, j).surd_part());
            }
        }
    }
    return Mat::from_entries(coords.rows(), 1, std::move(e));
}

inline Scalar trace_pair(const Mat& a, const Mat& b) {
    Mat p = a * b;
    Scalar t;
    for (int i = 0; i < p.rows(); ++i) t += p(i, i);
    return t;
}

}  // namespace detail

// Rational basis of the admissible subspace W: symmetric matrices S over the
// field, with rational unknown coordinates, whose alternating form takes
// values without surd part on every lattice generator pair.  Elements of W
// scale to integral alternating forms by a positive integer, so the lattice
// admits a polarization exactly when W meets the positive definite cone.
inline std::vector<Mat> admissible_subspace(const RealLattice& l) {
    const int g = l.genus();
    const long long d = l.field().d;
    const int n = detail::sym_coord_count(g, d);

    std::vector<Mat> units;
    units.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        Mat coords(n, 1);
        std::vector<Scalar> e(static_cast<size_t>(n));
        e[static_cast<size_t>(t)] = Scalar(1);
        units.push_back(detail::sym_from_coords(g, d, Mat::from_entries(n, 1, std::move(e))));
    }
    if (d == 0) return units;

    Mat p = ambient_generators(l);
    const int m = p.cols();
    std::vector<Scalar> rows;
    int nrows = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int t = 0; t < n; ++t) {
                Mat eg = units[static_cast<size_t>(t)];
                // E(lambda_a, lambda_b) with S = unit t.
                Mat emat = Mat::block2x2(Mat(g, g), -eg, eg, Mat(g, g));
                Scalar val = (p.col(a).transpose() * emat * p.col(b))(0, 0);
                rows.push_back(Scalar(val.surd_part()));
            }
            ++nrows;
        }
    }
    Mat constraints = Mat::from_entries(nrows, n, std::move(rows));
    Mat kernel = fkernel(constraints);
    std::vector<Mat> basis;
    basis.reserve(static_cast<size_t>(kernel.cols()));
    for (int j = 0; j < kernel.cols(); ++j) {
        basis.push_back(detail::sym_from_coords(g, d, kernel.col(j)));
    }
    return basis;
}

struct PolarizabilityCertificate {
    enum class Verdict { yes, no, unknown };
    Verdict verdict = Verdict::unknown;
    std::optional<Mat> witness;     // exact S passing verify_polarization
    std::optional<Mat> separating;  // exact PSD Q, nonzero, trace-orthogonal to W
    std::string note;
};

// A nonzero PSD matrix orthogonal to W certifies emptiness of W's
// intersection with the positive definite cone: a PD element S of W would
// give trace(QS) > 0, while orthogonality forces trace(QS) = 0.
inline bool verify_no_certificate(const RealLattice& l, const Mat& q) {
    if (q.rows() != l.genus() || q.cols() != l.genus()) return false;
    if (!q.is_symmetric() || q.is_zero()) return false;
    if (!is_positive_semidefinite(q)) return false;
    for (const Mat& w : admissible_subspace(l)) {
        if (!detail::trace_pair(q, w).is_zero()) return false;
    }
    return true;
}

namespace detail {

// Smallest positive integer multiple of s whose alternating form is integral
// on the lattice; requires the values to be rational already (s in W).
inline Mat scale_to_integral(const RealLattice& l, const Mat& s) {
    Mat gram = e_gram(l, {s, Mat(s.rows(), s.cols())});
    mpz_class k = 1;
    for (int i = 0; i < gram.rows(); ++i) {
        for (int j = 0; j < gram.cols(); ++j) {
            const Scalar& v = gram(i, j);
            if (v.surd_part() != 0) throw error("alternating form value has a surd part");
            mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), v.rational_part().get_den().get_mpz_t());
        }
    }
    return Scalar(k) * s;
}

struct WSpace {
    int g = 0;
    long long d = 0;
    std::vector<Mat> basis;
    Mat coord_cols;  // n x k rational matrix, columns = coordinates of basis
};

inline WSpace w_space(const RealLattice& l) {
    WSpace w;
    w.g = l.genus();
    w.d = l.field().d;
    w.basis = admissible_subspace(l);
    int n = sym_coord_count(w.g, w.d);
    Mat cols(n, 0);
    for (const Mat& b : w.basis) {
        cols = cols.cols() == 0 ? sym_to_coords(w.g, w.d, b)
                                : Mat::hcat(cols, sym_to_coords(w.g, w.d, b));
    }
    w.coord_cols = cols;
    return w;
}

inline bool member_of_w(const WSpace& w, const Mat& s) {
    if (w.basis.empty()) return s.is_zero();
    return fsolve_tall(w.coord_cols, sym_to_coords(w.g, w.d, s)).has_value();
}

// Orthogonal projection of s onto W in the rational coordinate dot product.
inline std::optional<Mat> project_onto_w(const WSpace& w, const Mat& s) {
    if (w.basis.empty()) return std::nullopt;
    Mat b = w.coord_cols;
    Mat bt = b.transpose();
    auto x = fsolve(bt * b, bt * sym_to_coords(w.g, w.d, s));
    if (!x) return std::nullopt;
    Mat c = b * *x;
    return sym_from_coords(w.g, w.d, c);
}

// Congruence diagonalization of a symmetric matrix over the field:
// returns c invertible with c^T q c diagonal.
struct CongruenceDiag {
    Mat c;
    std::vector<Scalar> diag;
};

inline CongruenceDiag diagonalize_symmetric(const Mat& q) {
    const int n = q.rows();
    std::vector<Scalar> a = q.entries_copy();
    auto at = [&](int i, int j) -> Scalar& { return a[static_cast<size_t>(i) * n + j]; };
    std::vector<Scalar> c(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i) * n + i] = Scalar(1);
    auto cat = [&](int i, int j) -> Scalar& { return c[static_cast<size_t>(i) * n + j]; };

    for (int i = 0; i < n; ++i) {
        if (at(i, i).is_zero()) {
            int swap_j = -1, mix_j = -1;
            for (int j = i + 1; j < n; ++j) {
                if (!at(j, j).is_zero() && swap_j < 0) swap_j = j;
                if (!at(i, j).is_zero() && mix_j < 0) mix_j = j;
            }
            if (swap_j >= 0) {
                for (int t = 0; t < n; ++t) std::swap(at(i, t), at(swap_j, t));
                for (int t = 0; t < n; ++t) std::swap(at(t, i), at(t, swap_j));
                for (int t = 0; t < n; ++t) std::swap(cat(t, i), cat(t, swap_j));
            } else if (mix_j >= 0) {
                for (int t = 0; t < n; ++t) at(i, t) += at(mix_j, t);
                for (int t = 0; t < n; ++t) at(t, i) += at(t, mix_j);
                for (int t = 0; t < n; ++t) cat(t, i) += cat(t, mix_j);
            } else {
                continue;  // row and column already zero
            }
        }
        Scalar pivot = at(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j).is_zero()) continue;
            Scalar f = at(i, j) / pivot;
            for (int t = 0; t < n; ++t) at(j, t) -= f * at(i, t);
            for (int t = 0; t < n; ++t) at(t, j) -= f * at(t, i);
            for (int t = 0; t < n; ++t) cat(t, j) -= f * cat(t, i);
        }
    }
    CongruenceDiag out;
    out.c = Mat::from_entries(n, n, std::move(c));
    out.diag.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.diag[static_cast<size_t>(i)] = at(i, i);
    return out;
}

// Exact dyadic lower approximation of a field scalar at precision 2^-m.
inline mpq_class dyadic_approx(const Scalar& v, int m) {
    mpq_class out = v.rational_part();
    if (v.surd_part() != 0) {
        mpz_class scale = 1;
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
        mpz_class rad = static_cast<long>(v.discriminant());
        rad *= scale;
        rad *= scale;
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
        mpq_class approx(root, scale);
        approx.canonicalize();
        out += v.surd_part() * approx;
    }
    return out;
}

}  // namespace detail

inline PolarizabilityCertificate decide_polarizable(const RealLattice& l,
                                                    std::uint64_t budget = 4096,
                                                    std::uint64_t seed = 0) {
    const int g = l.genus();
    const long long d = l.field().d;
    detail::WSpace w = detail::w_space(l);
    const int k = static_cast<int>(w.basis.size());

    PolarizabilityCertificate out;
    auto yes = [&](const Mat& s) {
        Mat witness = detail::scale_to_integral(l, s);
        if (!verify_polarization(l, witness)) throw error("witness failed re-verification");
        out.verdict = PolarizabilityCertificate::Verdict::yes;
        out.witness = witness;
        return out;
    };
    auto no = [&](const Mat& q, const char* reason) {
        if (!verify_no_certificate(l, q)) throw error("certificate failed re-verification");
        out.verdict = PolarizabilityCertificate::Verdict::no;
        out.separating = q;
        out.note = reason;
        return out;
    };

    if (k == 0) return no(Mat::identity(g), "admissible subspace is zero");

    // Rational minus part: k (F F^T)^(-1) always works.
    if (l.period().is_rational()) {
        Mat f = l.period();
        auto inv = finverse(f * f.transpose());
        if (!inv) throw error("period gram matrix is singular");
        return yes(*inv);
    }

    if (g == 1) {
        Mat s = w.basis.front();
        int sg = s(0, 0).sign();
        if (sg == 0) throw error("zero basis element in the admissible subspace");
        return yes(sg > 0 ? s : -s);
    }

    // Cheap exact candidates valid in any dimension.
    {
        std::vector<Mat> candidates;
        candidates.push_back(Mat::identity(g));
        if (d != 0) candidates.push_back(Scalar::sqrt_of(d) * Mat::identity(g));
        if (auto proj = detail::project_onto_w(w, Mat::identity(g))) {
            candidates.push_back(*proj);
        }
        for (const Mat& s : candidates) {
            if (is_positive_definite(s) && detail::member_of_w(w, s)) return yes(s);
        }
    }

    if (g == 2) {
        // det over W is a quadratic form in the rational coordinates; the
        // lattice is polarizable iff it takes a positive value.
        Mat qf(k, k);
        {
            std::vector<Scalar> e(static_cast<size_t>(k) * k);
            std::vector<Scalar> dets(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) dets[static_cast<size_t>(i)] = fdet(w.basis[static_cast<size_t>(i)]);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    Scalar v = i == j ? dets[static_cast<size_t>(i)]
                                      : (fdet(w.basis[static_cast<size_t>(i)] +
                                              w.basis[static_cast<size_t>(j)]) -
                                         dets[static_cast<size_t>(i)] -
                                         dets[static_cast<size_t>(j)]) /
                                            Scalar(2);
                    e[static_cast<size_t>(i) * k + j] = v;
                }
            }
            qf = Mat::from_entries(k, k, std::move(e));
        }

        if (!is_positive_semidefinite(-qf)) {
            // Positive direction exists; diagonalize, pick it, and pull it
            // back to a nearby rational point (the condition is open).
            detail::CongruenceDiag cd = detail::diagonalize_symmetric(qf);
            int pos = -1;
            for (int i = 0; i < k; ++i) {
                if (cd.diag[static_cast<size_t>(i)].sign() > 0) {
                    pos = i;
                    break;
                }
            }
            if (pos < 0) throw error("indefinite form without positive diagonal entry");
            for (int m = 1; m <= 256; ++m) {
                Mat s(g, g);
                bool first = true;
                for (int i = 0; i < k; ++i) {
                    mpq_class ti = detail::dyadic_approx(cd.c(i, pos), m);
                    if (ti == 0) continue;
                    Mat term = Scalar(ti) * w.basis[static_cast<size_t>(i)];
                    s = first ? term : s + term;
                    first = false;
                }
                if (first) continue;
                if (fdet(s).sign() <= 0) continue;
                if (s(0, 0).sign() < 0) s = -s;
                if (is_positive_definite(s)) return yes(s);
            }
            throw error("failed to rationalize a positive direction");
        }

        // det <= 0 on the whole real span of W: no PD element exists.
        // Build the separating certificate from the real span's dimension.
        Mat omega(3, k);
        {
            std::vector<Scalar> e(static_cast<size_t>(3) * k);
            for (int j = 0; j < k; ++j) {
                const Mat& b = w.basis[static_cast<size_t>(j)];
                e[static_cast<size_t>(0) * k + j] = b(0, 0);
                e[static_cast<size_t>(1) * k + j] = b(0, 1);
                e[static_cast<size_t>(2) * k + j] = b(1, 1);
            }
            omega = Mat::from_entries(3, k, std::move(e));
        }
        int r = frank(omega);
        if (r == 1) {
            Mat s = w.basis.front();
            Scalar a = s(0, 0), b = s(0, 1), c = s(1, 1);
            int ds = fdet(s).sign();
            if (ds > 0) throw error("positive determinant in the infeasible branch");
            if (ds < 0) {
                if (!a.is_zero()) {
                    Scalar q11 = (Scalar(2) * b * b - a * c) / (a * a);
                    Scalar q12 = -(b / a);
                    return no(Mat::from_rows({{q11, q12}, {q12, Scalar(1)}}),
                              "determinant negative on the admissible line");
                }
                return no(Mat::from_rows({{Scalar(1), Scalar()}, {Scalar(), Scalar()}}),
                          "determinant negative on the admissible line");
            }
            // rank one element: certificate from its kernel direction
            Scalar v1, v2;
            if (!a.is_zero() || !b.is_zero()) {
                v1 = a.is_zero() ? b : a;
                v2 = a.is_zero() ? c : b;
            } else {
                v1 = b;
                v2 = c;
            }
            Mat q = Mat::from_rows({{v2 * v2, -(v1 * v2)}, {-(v1 * v2), v1 * v1}});
            return no(q, "admissible line is rank one");
        }
        if (r == 2) {
            Mat pairing(k, 3);
            {
                std::vector<Scalar> e(static_cast<size_t>(k) * 3);
                for (int i = 0; i < k; ++i) {
                    const Mat& b = w.basis[static_cast<size_t>(i)];
                    e[static_cast<size_t>(i) * 3 + 0] = b(0, 0);
                    e[static_cast<size_t>(i) * 3 + 1] = Scalar(2) * b(0, 1);
                    e[static_cast<size_t>(i) * 3 + 2] = b(1, 1);
                }
                pairing = Mat::from_entries(k, 3, std::move(e));
            }
            Mat kern = fkernel(pairing);
            if (kern.cols() != 1) throw error("orthogonal complement has unexpected dimension");
            Mat q = Mat::from_rows({{kern(0, 0), kern(1, 0)}, {kern(1, 0), kern(2, 0)}});
            if (is_positive_semidefinite(q)) {
                return no(q, "trace-orthogonal complement of the admissible plane");
            }
            return no(-q, "trace-orthogonal complement of the admissible plane");
        }
        throw error("full admissible span cannot be infeasible");
    }

    // g >= 3: exact certification of heuristically found candidates.
    std::mt19937_64 rng(seed);
    std::uint64_t samples = budget < 512 ? budget : 512;
    for (std::uint64_t it = 0; it < samples; ++it) {
        Mat s(g, g);
        bool first = true;
        for (int i = 0; i < k; ++i) {
            std::uint64_t r = rng();
            long long num = static_cast<long long>(r % 7) - 3;
            long long den = 1 + static_cast<long long>((r >> 32) % 2);
            if (num == 0) continue;
            Mat term = Scalar::rational(num, den) * w.basis[static_cast<size_t>(i)];
            s = first ? term : s + term;
            first = false;
        }
        if (first) continue;
        if (is_positive_definite(s)) return yes(s);
    }

    // Common kernel vector of every basis element gives a PSD certificate.
    {
        Mat stacked(0, g);
        for (const Mat& b : w.basis) {
            stacked = stacked.rows() == 0 ? b : Mat::vcat(stacked, b);
        }
        Mat kern = fkernel(stacked);
        if (kern.cols() > 0) {
            Mat u = kern.col(0);
            Mat q = u * u.transpose();
            if (verify_no_certificate(l, q)) {
                out.verdict = PolarizabilityCertificate::Verdict::no;
                out.separating = q;
                out.note = "common kernel direction of the admissible subspace";
                return out;
            }
        }
    }

    out.verdict = PolarizabilityCertificate::Verdict::unknown;
    out.note = "search budget exhausted";
    return out;
}

struct DualResult {
    RealLattice lattice;
    // Columns express the canonical split frame of the dual in the
    // functional coordinates dual to the ambient (re | im) frame.
    Mat frame;
};

// Lattice of anti-linear functionals whose imaginary parts are integral on
// the lattice, carrying the involution ell -> conj of ell after conjugation,
// split back to canonical form.
inline DualResult dual_lattice(const RealLattice& l) {
    const int g = l.genus();
    Mat p = ambient_generators(l);
    auto pinv = finverse(p);
    if (!pinv) throw error("singular generator matrix");
    Mat phat = j_matrix(g) * pinv->transpose();
    Mat theta = Mat::block2x2(Mat::identity(g), Mat(g, g), Mat(g, g), -Mat::identity(g));
    DescendedLattice dl = unwrap(DescendedLattice::create(g, l.field(), phat, theta.transpose()),
                                 "dual lattice");
    SplitResult s = split(dl);
    return {s.lattice, s.frame};
}

// Real matrix of v -> H(v, .) into the functional coordinates.
inline Mat phi_matrix(const HermitianForm& h) {
    return Mat::block2x2(h.re, h.im, -h.im, h.re);
}

inline bool descent_compatible(const RealLattice& l, const HermitianForm& h) {
    const int g = l.genus();
    Mat theta = Mat::block2x2(Mat::identity(g), Mat(g, g), Mat(g, g), -Mat::identity(g));
    Mat phi = phi_matrix(h);
    return phi * theta == theta.transpose() * phi;
}

inline bool descent_compatible(const RealLattice& l, const Mat& s) {
    return descent_compatible(l, s_to_h(s));
}

// Exact membership of every image generator in the dual lattice.
inline bool phi_maps_into_dual(const RealLattice& l, const Mat& s) {
    const int g = l.genus();
    Mat p = ambient_generators(l);
    auto pinv = finverse(p);
    if (!pinv) throw error("singular generator matrix");
    Mat dual_basis = j_matrix(g) * pinv->transpose();
    Mat image = phi_matrix(s_to_h(s)) * p;
    auto coords = fsolve(dual_basis, image);
    return coords && coords->is_integral();
}

}  // namespace reallat
