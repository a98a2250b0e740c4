#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reallat/scalar.hpp"

namespace reallat {

using F2Vec = std::vector<unsigned char>;  // entries 0/1

inline F2Vec f2_concat(const F2Vec& x, const F2Vec& y) {
    F2Vec v = x;
    v.insert(v.end(), y.begin(), y.end());
    return v;
}

inline bool f2_is_zero(const F2Vec& v) {
    return std::all_of(v.begin(), v.end(), [](unsigned char b) { return b == 0; });
}

inline void f2_xor(F2Vec& dst, const F2Vec& src) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

// Reduced echelon basis, canonical: leading ones strictly left-to-right,
// pivot columns cleared elsewhere, zero rows dropped.
inline std::vector<F2Vec> f2_rref(std::vector<F2Vec> rows) {
    std::vector<F2Vec> basis;
    if (rows.empty()) return basis;
    const size_t n = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c]) f2_xor(rows[i], rows[r]);
        }
        ++r;
    }
    for (size_t i = 0; i < r; ++i) basis.push_back(rows[i]);
    return basis;
}

inline int f2_rank(const std::vector<F2Vec>& rows) {
    return static_cast<int>(f2_rref(rows).size());
}

// Subgroup of F_2^(2g) recording which half-sums of plus/minus lattice
// vectors belong to the lattice.  Stored as a canonical reduced echelon
// basis of (x-bits | y-bits) words.
class GlueGroup {
public:
    GlueGroup() : g_(0) {}

    static GlueGroup from_generators(int g, const std::vector<F2Vec>& gens) {
        if (g < 0) throw error("negative rank");
        for (const auto& v : gens) {
            if (static_cast<int>(v.size()) != 2 * g) throw error("glue word has wrong length");
            for (unsigned char b : v) {
                if (b > 1) throw error("glue word entries must be bits");
            }
        }
        GlueGroup out;
        out.g_ = g;
        out.basis_ = f2_rref(gens);
        return out;
    }

    static GlueGroup trivial(int g) { return from_generators(g, {}); }

    int genus() const { return g_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<F2Vec>& basis() const { return basis_; }

    bool contains(const F2Vec& v) const {
        if (static_cast<int>(v.size()) != 2 * g_) return false;
        F2Vec w = v;
        for (const auto& b : basis_) {
            size_t lead = 0;
            while (lead < b.size() && b[lead] == 0) ++lead;
            if (lead < w.size() && w[lead]) f2_xor(w, b);
        }
        return f2_is_zero(w);
    }

    // The x-block condition: no nonzero element has all y-bits zero, which
    // holds exactly when the y-projections of the basis stay independent.
    bool meets_x_block() const { return projection_rank(g_, 2 * g_) < dim(); }
    bool meets_y_block() const { return projection_rank(0, g_) < dim(); }

    F2Vec x_bits(const F2Vec& word) const { return F2Vec(word.begin(), word.begin() + g_); }
    F2Vec y_bits(const F2Vec& word) const { return F2Vec(word.begin() + g_, word.end()); }

    friend bool operator==(const GlueGroup& a, const GlueGroup& b) {
        return a.g_ == b.g_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const GlueGroup& a, const GlueGroup& b) { return !(a == b); }

private:
    int projection_rank(int from, int to) const {
        std::vector<F2Vec> proj;
        proj.reserve(basis_.size());
        for (const auto& b : basis_) proj.emplace_back(b.begin() + from, b.begin() + to);
        return f2_rank(proj);
    }

    int g_;
    std::vector<F2Vec> basis_;
};

}  // namespace reallat
