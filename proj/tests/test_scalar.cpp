#include <catch2/catch_amalgamated.hpp>

#include "reallat/scalar.hpp"

using reallat::Field;
using reallat::Scalar;

namespace {

Scalar surd(long long rn, long long rd, long long sn, long long sd, long long d) {
    mpq_class r(static_cast<long>(rn), static_cast<long>(rd));
    mpq_class s(static_cast<long>(sn), static_cast<long>(sd));
    r.canonicalize();
    s.canonicalize();
    return Scalar::with_surd(r, s, d);
}

}  // namespace

TEST_CASE("discriminant validation") {
    CHECK(reallat::is_valid_discriminant(2));
    CHECK(reallat::is_valid_discriminant(3));
    CHECK(reallat::is_valid_discriminant(5));
    CHECK(reallat::is_valid_discriminant(6));
    CHECK(reallat::is_valid_discriminant(10));
    CHECK_FALSE(reallat::is_valid_discriminant(0));
    CHECK_FALSE(reallat::is_valid_discriminant(1));
    CHECK_FALSE(reallat::is_valid_discriminant(-2));
    CHECK_FALSE(reallat::is_valid_discriminant(4));
    CHECK_FALSE(reallat::is_valid_discriminant(12));
    CHECK_FALSE(reallat::is_valid_discriminant(18));
    CHECK_THROWS_AS(Scalar::with_surd(1, 1, 4), reallat::error);
}

TEST_CASE("exact signs near the rational boundary") {
    // 1 - sqrt(2) < 0 because 1 < 2.
    CHECK(surd(1, 1, -1, 1, 2).sign() == -1);
    // 3 - 2 sqrt(2) > 0 because 9 > 8.
    CHECK(surd(3, 1, -2, 1, 2).sign() == 1);
    // 7 - 5 sqrt(2) < 0 because 49 < 50.
    CHECK(surd(7, 1, -5, 1, 2).sign() == -1);
    // 2 - sqrt(3) > 0 because 4 > 3.
    CHECK(surd(2, 1, -1, 1, 3).sign() == 1);
    // -3 + 2 sqrt(2) < 0.
    CHECK(surd(-3, 1, 2, 1, 2).sign() == -1);
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(-7).sign() == -1);
    CHECK(Scalar::sqrt_of(5).sign() == 1);
}

TEST_CASE("field arithmetic identities") {
    Scalar one_plus = surd(1, 1, 1, 1, 2);
    Scalar one_minus = surd(1, 1, -1, 1, 2);
    CHECK(one_plus * one_minus == Scalar(-1));
    // (1 + sqrt 2)^(-1) = sqrt 2 - 1.
    CHECK(one_plus.inverse() == surd(-1, 1, 1, 1, 2));
    CHECK(one_plus * one_plus.inverse() == Scalar(1));
    CHECK(one_plus + one_minus == Scalar(2));
    CHECK(one_plus - one_minus == surd(0, 1, 2, 1, 2));
    CHECK(one_plus.conjugate() == one_minus);
    CHECK(one_plus.norm() == mpq_class(-1));
    CHECK((Scalar::sqrt_of(2) * Scalar::sqrt_of(2)) == Scalar(2));
}

TEST_CASE("surd-free products collapse to plain rationals") {
    Scalar v = Scalar::sqrt_of(3) * Scalar::sqrt_of(3);
    CHECK(v.is_rational());
    CHECK(v.discriminant() == 0);
    Scalar w = surd(1, 1, 1, 1, 2) - Scalar::sqrt_of(2);
    CHECK(w == Scalar(1));
    CHECK(w.discriminant() == 0);
}

TEST_CASE("mixed discriminants are rejected") {
    CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), reallat::error);
    CHECK_THROWS_AS(Scalar::sqrt_of(2) * Scalar::sqrt_of(5), reallat::error);
    CHECK_NOTHROW(Scalar::sqrt_of(2) + Scalar(1));
}

TEST_CASE("division") {
    CHECK(Scalar(1) / Scalar::sqrt_of(2) == surd(0, 1, 1, 2, 2));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), reallat::error);
    CHECK(Scalar::rational(3, 4) / Scalar::rational(3, 2) == Scalar::rational(1, 2));
}

TEST_CASE("comparisons and abs") {
    CHECK(Scalar::rational(1, 2) < Scalar::rational(3, 4));
    CHECK(Scalar::sqrt_of(2) > Scalar(1));
    CHECK(-Scalar::sqrt_of(2) < Scalar(-1));
    CHECK(surd(1, 1, -1, 1, 2).abs() == surd(-1, 1, 1, 1, 2));
    CHECK(Scalar(-5).abs() == Scalar(5));
    CHECK(Scalar(0).abs() == Scalar(0));
}

TEST_CASE("integrality predicates") {
    CHECK(Scalar(3).is_integer());
    CHECK_FALSE(Scalar::rational(1, 2).is_integer());
    CHECK(Scalar::rational(1, 2).is_half_integer());
    CHECK(Scalar(3).is_half_integer());
    CHECK_FALSE(Scalar::rational(1, 3).is_half_integer());
    CHECK_FALSE(Scalar::sqrt_of(2).is_integer());
    CHECK_FALSE(Scalar::sqrt_of(2).is_half_integer());
}

TEST_CASE("canonical literals") {
    CHECK(Scalar::rational(1, 2).str() == "1/2");
    CHECK(Scalar(-3).str() == "-3/1");
    CHECK(surd(0, 1, 1, 1, 2).str() == "0/1 + 1/1 w");
    CHECK(surd(1, 2, -3, 2, 5).str() == "1/2 - 3/2 w");
}

TEST_CASE("rational constructor canonicalizes") {
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(3, -6) == Scalar::rational(-1, 2));
    CHECK_THROWS_AS(Scalar::rational(1, 0), reallat::error);
}

TEST_CASE("field marker") {
    Field q{0}, q2{2}, q3{3};
    CHECK(q == Field{0});
    CHECK(q2 != q3);
    CHECK_NOTHROW(reallat::require_same_field(q2, q2));
    CHECK_THROWS_AS(reallat::require_same_field(q2, q3), reallat::error);
}
