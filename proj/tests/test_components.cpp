#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "reallat/components.hpp"
#include "reallat/random.hpp"

using reallat::ComponentGroup;
using reallat::F2Vec;
using reallat::Field;
using reallat::Mat;
using reallat::RealLattice;
using reallat::Scalar;

namespace {

F2Vec word(const std::string& bits) {
    F2Vec w;
    for (char c : bits) {
        if (c == '|') continue;
        w.push_back(c == '1' ? 1 : 0);
    }
    return w;
}

RealLattice make(int g, const Field& f, const Mat& period, const std::vector<F2Vec>& glue) {
    return reallat::unwrap(RealLattice::create(g, f, period, glue), "test lattice");
}

}  // namespace

TEST_CASE("component counts in genus one") {
    RealLattice square = make(1, Field{2}, Mat::from_rows({{Scalar::sqrt_of(2)}}), {});
    ComponentGroup cs = reallat::pi0_via_glue(square);
    CHECK(cs.f2_rank == 1);
    CHECK(cs.order == 2);
    CHECK(cs.identity_dim == 1);
    CHECK(reallat::components_string(cs) == "components: 2");

    RealLattice diamond = make(1, Field{2}, Mat::from_rows({{Scalar::sqrt_of(2)}}), {word("1|1")});
    ComponentGroup cd = reallat::pi0_via_glue(diamond);
    CHECK(cd.f2_rank == 0);
    CHECK(cd.order == 1);
    CHECK(reallat::components_string(cd) == "components: 1 (connected)");
}

TEST_CASE("component counts in genus two") {
    RealLattice free2 = make(2, Field{0}, Mat::identity(2), {});
    CHECK(reallat::pi0_via_glue(free2).f2_rank == 2);
    CHECK(reallat::pi0_via_glue(free2).order == 4);
    CHECK(reallat::components_string(reallat::pi0_via_glue(free2)) == "components: 4");

    RealLattice one_word = make(2, Field{0}, Mat::identity(2), {word("11|11")});
    CHECK(reallat::pi0_via_glue(one_word).f2_rank == 1);

    RealLattice full = make(2, Field{0}, Mat::identity(2), {word("10|10"), word("01|01")});
    CHECK(reallat::pi0_via_glue(full).f2_rank == 0);
    CHECK(reallat::components_string(reallat::pi0_via_glue(full)) ==
          "components: 1 (connected)");
}

TEST_CASE("both component computations agree") {
    for (int g = 1; g <= 4; ++g) {
        for (long long d : {0LL, 2LL, 3LL}) {
            auto batch = reallat::gen_random(g, Field{d}, 5000 + 100 * g + d, 18);
            for (const RealLattice& l : batch) {
                ComponentGroup a = reallat::pi0_via_glue(l);
                ComponentGroup b = reallat::pi0_via_cohomology(l);
                CHECK(a == b);
                CHECK(a.f2_rank == g - l.glue().dim());
                CHECK(a.identity_dim == g);
                CHECK(a.f2_rank >= 0);
                CHECK(a.f2_rank <= g);
            }
        }
    }
}

TEST_CASE("rank drops exactly with the glue dimension") {
    // adding an independent glue word removes one component factor of 2.
    RealLattice l0 = make(2, Field{0}, Mat::identity(2), {});
    RealLattice l1 = make(2, Field{0}, Mat::identity(2), {word("10|01")});
    RealLattice l2 = make(2, Field{0}, Mat::identity(2), {word("10|01"), word("01|10")});
    CHECK(reallat::pi0_via_glue(l0).order == 4);
    CHECK(reallat::pi0_via_glue(l1).order == 2);
    CHECK(reallat::pi0_via_glue(l2).order == 1);
}
