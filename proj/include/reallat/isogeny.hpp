#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reallat/fieldlinalg.hpp"
#include "reallat/intlinalg.hpp"
#include "reallat/lattice.hpp"

namespace reallat {

inline void require_comparable(const RealLattice& a, const RealLattice& b) {
    if (a.genus() != b.genus()) throw error("lattices have different g");
    require_same_field(a.field(), b.field());
}

// U maps the plus part onto the plus part (unimodular) and the rational span
// of the minus part onto the rational span of the other minus part; the
// second condition reduces to F'^(-1) U F having rational entries, because
// the full lattice spans the same rational space as the split sum.
inline bool verify_imaginary_isogeny(const RealLattice& a, const RealLattice& b, const IMat& u) {
    require_comparable(a, b);
    const int g = a.genus();
    if (u.rows() != g || u.cols() != g) throw error("witness shape does not match");
    if (!is_unimodular(u)) return false;
    auto r = fsolve(b.period(), u.to_mat() * a.period());
    if (!r) throw error("singular period");
    return r->is_rational();
}

// Saturated integer basis (columns, row-major vec of U) of the solution
// space {U : F'^(-1) U F is rational}.
inline IMat isogeny_solution_lattice(const RealLattice& a, const RealLattice& b) {
    require_comparable(a, b);
    const int g = a.genus();
    auto fb_inv = finverse(b.period());
    if (!fb_inv) throw error("singular period");
    const Mat& fa = a.period();

    std::vector<Scalar> rows;
    rows.reserve(static_cast<size_t>(g) * g * g * g);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            for (int p = 0; p < g; ++p) {
                for (int q = 0; q < g; ++q) {
                    Scalar coeff = (*fb_inv)(i, p) * fa(q, j);
                    rows.push_back(Scalar(coeff.surd_part()));
                }
            }
        }
    }
    Mat constraints = Mat::from_entries(g * g, g * g, std::move(rows));
    ScaledInt scaled = to_integer_scaled(constraints);
    return integer_kernel(scaled.mat);
}

struct IsogenyDecision {
    enum class Verdict { yes, no, unknown };
    enum class NoReason { none, trivial_solution_space, irrational_ratio };
    Verdict verdict = Verdict::unknown;
    std::optional<IMat> witness;
    NoReason reason = NoReason::none;
    std::string note;
};

inline IsogenyDecision decide_imaginary_isogeny(const RealLattice& a, const RealLattice& b,
                                                std::uint64_t budget = 4096) {
    require_comparable(a, b);
    const int g = a.genus();
    IsogenyDecision out;

    IMat id = IMat::identity(g);
    if (verify_imaginary_isogeny(a, b, id)) {
        out.verdict = IsogenyDecision::Verdict::yes;
        out.witness = id;
        return out;
    }

    IMat basis = isogeny_solution_lattice(a, b);
    const int s = basis.cols();
    if (s == 0) {
        out.verdict = IsogenyDecision::Verdict::no;
        if (g == 1) {
            Scalar ratio = a.period()(0, 0) / b.period()(0, 0);
            out.reason = IsogenyDecision::NoReason::irrational_ratio;
            out.note = "period ratio " + ratio.str() + " is irrational";
        } else {
            out.reason = IsogenyDecision::NoReason::trivial_solution_space;
            out.note = "rational solution space is zero";
        }
        return out;
    }

    if (g == 1) {
        // A nonzero solution space in one dimension means the ratio is
        // rational, and the unit witness already verifies.
        IMat one = IMat::from_rows({{1}});
        if (!verify_imaginary_isogeny(a, b, one)) {
            throw error("unit witness failed with a rational period ratio");
        }
        out.verdict = IsogenyDecision::Verdict::yes;
        out.witness = one;
        return out;
    }

    // Bounded search over integer combinations of the solution basis,
    // by increasing coefficient box, first nonzero coefficient positive.
    std::uint64_t tried = 0;
    std::vector<long long> c(static_cast<size_t>(s));
    for (long long radius = 1; tried < budget; ++radius) {
        bool any_at_radius = false;
        std::fill(c.begin(), c.end(), -radius);
        while (true) {
            long long maxabs = 0;
            for (long long v : c) maxabs = std::max(maxabs, v < 0 ? -v : v);
            bool fresh = maxabs == radius;
            bool canonical_sign = true;
            for (long long v : c) {
                if (v != 0) {
                    canonical_sign = v > 0;
                    break;
                }
            }
            if (fresh && canonical_sign) {
                any_at_radius = true;
                ++tried;
                std::vector<mpz_class> e(static_cast<size_t>(g) * g);
                for (int i = 0; i < s; ++i) {
                    if (c[static_cast<size_t>(i)] == 0) continue;
                    for (int t = 0; t < g * g; ++t) {
                        e[static_cast<size_t>(t)] += static_cast<long>(c[static_cast<size_t>(i)]) * basis(t, i);
                    }
                }
                IMat u = IMat::from_entries(g, g, std::move(e));
                mpz_class det = idet(u);
                if (det == 1 || det == -1) {
                    if (!verify_imaginary_isogeny(a, b, u)) {
                        throw error("enumerated witness failed re-verification");
                    }
                    out.verdict = IsogenyDecision::Verdict::yes;
                    out.witness = u;
                    return out;
                }
                if (tried >= budget) break;
            }
            int pos = 0;
            while (pos < s && c[static_cast<size_t>(pos)] == radius) {
                c[static_cast<size_t>(pos)] = -radius;
                ++pos;
            }
            if (pos == s) break;
            ++c[static_cast<size_t>(pos)];
        }
        if (!any_at_radius && tried >= budget) break;
    }
    out.verdict = IsogenyDecision::Verdict::unknown;
    out.note = "search budget exhausted";
    return out;
}

enum class LatticeShape1D { rectangular, diamond };

struct NormalForm1D {
    LatticeShape1D kind;
    Scalar alpha;

    friend bool operator==(const NormalForm1D& a, const NormalForm1D& b) {
        return a.kind == b.kind && a.alpha == b.alpha;
    }
    friend bool operator!=(const NormalForm1D& a, const NormalForm1D& b) { return !(a == b); }
};

// In one dimension the only valid glue groups are trivial (rectangular,
// Z + sqrt(-1) alpha Z) and {(1|1)} (diamond, Z + (1/2 + sqrt(-1) alpha) Z,
// whose minus part is 2 alpha sqrt(-1) Z).
inline NormalForm1D normal_form_1d(const RealLattice& l) {
    if (l.genus() != 1) throw error("one-dimensional normal form needs g = 1");
    Scalar f = l.period()(0, 0).abs();
    if (l.glue().dim() == 0) return {LatticeShape1D::rectangular, f};
    return {LatticeShape1D::diamond, f / Scalar(2)};
}

struct CorpusClassification {
    struct PairDecision {
        int i = 0, j = 0;
        IsogenyDecision decision;
    };
    std::vector<PairDecision> pairs;
    std::vector<std::vector<int>> classes;
    std::vector<std::pair<int, int>> unknown_pairs;
};

// Partition by certified Yes decisions only; the result is a refinement of
// the true classification, with Unknown pairs reported separately.
inline CorpusClassification classify_corpus(const std::vector<RealLattice>& corpus,
                                            std::uint64_t budget = 4096) {
    const int n = static_cast<int>(corpus.size());
    CorpusClassification out;
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            IsogenyDecision d =
                decide_imaginary_isogeny(corpus[static_cast<size_t>(i)],
                                         corpus[static_cast<size_t>(j)], budget);
            if (d.verdict == IsogenyDecision::Verdict::yes) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
            } else if (d.verdict == IsogenyDecision::Verdict::unknown) {
                out.unknown_pairs.emplace_back(i, j);
            }
            out.pairs.push_back({i, j, std::move(d)});
        }
    }

    std::vector<int> root_class(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (root_class[static_cast<size_t>(r)] < 0) {
            root_class[static_cast<size_t>(r)] = static_cast<int>(out.classes.size());
            out.classes.emplace_back();
        }
        out.classes[static_cast<size_t>(root_class[static_cast<size_t>(r)])].push_back(i);
    }
    return out;
}

}  // namespace reallat
