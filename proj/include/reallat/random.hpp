#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "reallat/intlinalg.hpp"
#include "reallat/lattice.hpp"

namespace reallat {

namespace rnddetail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Numerator in [-3, 3], denominator in {1, 2, 3}.
inline mpq_class small_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(draw(rng, 7)) - 3;
    long long den = 1 + static_cast<long long>(draw(rng, 3));
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline Scalar small_scalar(std::mt19937_64& rng, const Field& field) {
    mpq_class rat = small_rational(rng);
    if (field.is_rational() || draw(rng, 2) == 0) return Scalar(rat);
    mpq_class sur = small_rational(rng);
    if (sur == 0) return Scalar(rat);
    return Scalar::with_surd(rat, sur, field.d);
}

inline Mat random_period(int g, const Field& field, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Scalar> e(static_cast<size_t>(g) * g);
        for (auto& v : e) v = small_scalar(rng, field);
        Mat m = Mat::from_entries(g, g, std::move(e));
        if (fdet(m) != Scalar(0)) return m;
    }
    throw error("random period sampling failed to find an invertible matrix");
}

inline std::vector<F2Vec> random_glue(int g, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int k = static_cast<int>(draw(rng, static_cast<std::uint64_t>(g) + 1));
        std::vector<F2Vec> words(static_cast<size_t>(k), F2Vec(static_cast<size_t>(2 * g)));
        for (auto& w : words) {
            for (auto& bit : w) bit = static_cast<unsigned char>(draw(rng, 2));
        }
        GlueGroup glue = GlueGroup::from_generators(g, words);
        if (glue.dim() != k) continue;
        if (glue.meets_x_block() || glue.meets_y_block()) continue;
        std::vector<F2Vec> basis = glue.basis();
        return basis;
    }
    throw error("random glue sampling failed");
}

}  // namespace rnddetail

// Deterministic per (g, field, seed, count); every output is valid.
inline std::vector<RealLattice> gen_random(int g, const Field& field, std::uint64_t seed,
                                           int count) {
    if (g < 1 || g > 6) throw error("random generation supports 1 <= g <= 6");
    Validation fv = validate_field(field);
    if (!fv.ok) throw error(fv.message);
    std::mt19937_64 rng(seed);
    std::vector<RealLattice> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 10000) throw error("random lattice sampling failed");
            Mat period = rnddetail::random_period(g, field, rng);
            std::vector<F2Vec> words = rnddetail::random_glue(g, rng);
            auto checked = RealLattice::create(g, field, period, words);
            if (checked.ok()) {
                out.push_back(*checked.value);
                break;
            }
        }
    }
    return out;
}

// Product of random elementary operations; always determinant +1 or -1.
inline IMat random_unimodular(int n, std::mt19937_64& rng) {
    std::vector<mpz_class> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i) * n + i] = 1;
    auto at = [&](int i, int j) -> mpz_class& { return e[static_cast<size_t>(i) * n + j]; };
    int ops = 3 * n + 2;
    for (int t = 0; t < ops; ++t) {
        std::uint64_t kind = rnddetail::draw(rng, 3);
        int i = static_cast<int>(rnddetail::draw(rng, static_cast<std::uint64_t>(n)));
        int j = static_cast<int>(rnddetail::draw(rng, static_cast<std::uint64_t>(n)));
        if (kind == 0 && i != j) {
            long long c = rnddetail::draw(rng, 2) == 0 ? 1 : -1;
            for (int k = 0; k < n; ++k) at(i, k) += static_cast<long>(c) * at(j, k);
        } else if (kind == 1 && i != j) {
            for (int k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
        } else if (kind == 2) {
            for (int k = 0; k < n; ++k) at(i, k) = -at(i, k);
        }
    }
    return IMat::from_entries(n, n, std::move(e));
}

}  // namespace reallat
