#pragma once

#include <string>

#include "reallat/intlinalg.hpp"
#include "reallat/lattice.hpp"

namespace reallat {

// Component group of the real points: an elementary abelian 2-group.
struct ComponentGroup {
    int f2_rank = 0;
    mpz_class order = 1;
    int identity_dim = 0;

    friend bool operator==(const ComponentGroup& a, const ComponentGroup& b) {
        return a.f2_rank == b.f2_rank && a.order == b.order &&
               a.identity_dim == b.identity_dim;
    }
    friend bool operator!=(const ComponentGroup& a, const ComponentGroup& b) {
        return !(a == b);
    }
};

namespace detail {

inline ComponentGroup component_group_of_rank(int g, int rank) {
    ComponentGroup c;
    c.f2_rank = rank;
    c.order = 1;
    mpz_mul_2exp(c.order.get_mpz_t(), c.order.get_mpz_t(), static_cast<mp_bitcnt_t>(rank));
    c.identity_dim = g;
    return c;
}

}  // namespace detail

// pi0 as (1/2)(plus + minus) / (lattice + (1/2)plus): its F2-dimension is
// 2g minus the dimension of the glue group joined with the x-block.
inline ComponentGroup pi0_via_glue(const RealLattice& l) {
    const int g = l.genus();
    std::vector<F2Vec> rows = l.glue().basis();
    for (int i = 0; i < g; ++i) {
        F2Vec x(2 * g, 0);
        x[i] = 1;
        rows.push_back(std::move(x));
    }
    int joined = f2_rank(rows);
    return detail::component_group_of_rank(g, 2 * g - joined);
}

// pi0 as the quotient of the minus part by (theta - 1) of the lattice,
// computed through Smith normal form on the coordinates of the image.
inline ComponentGroup pi0_via_cohomology(const RealLattice& l) {
    const int g = l.genus();
    Mat gen = generators(l);
    Mat theta = Mat::block2x2(Mat::identity(g), Mat(g, g), Mat(g, g), -Mat::identity(g));
    IMat t = imat_from_mat(unwrap_solve(gen, theta * gen), "descent on the lattice basis");

    Mat minus_cols = Mat::vcat(Mat(g, g), Mat::identity(g));
    IMat n = imat_from_mat(unwrap_solve(gen, minus_cols), "minus basis in lattice coordinates");

    auto c = solve_integer(n, t - IMat::identity(2 * g));
    if (!c) throw error("(theta - 1) image does not lie in the minus part");
    std::vector<mpz_class> factors = invariant_factors(*c);
    if (static_cast<int>(factors.size()) != g) {
        throw error("component group quotient is not finite");
    }
    int rank = 0;
    for (const auto& f : factors) {
        if (f == 1) continue;
        if (f == 2) {
            ++rank;
            continue;
        }
        throw error("component group has an invariant factor outside {1, 2}");
    }
    return detail::component_group_of_rank(g, rank);
}

inline std::string components_string(const ComponentGroup& c) {
    if (c.f2_rank == 0) return "components: 1 (connected)";
    return "components: " + c.order.get_str();
}

}  // namespace reallat
