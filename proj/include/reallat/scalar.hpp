#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace reallat {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// d must be a squarefree integer >= 2; everything else is rejected at the
// boundary so sign computations stay well defined.
inline bool is_valid_discriminant(long long d) {
    if (d < 2) return false;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

// Element of Q or of a real quadratic field Q(sqrt(d)): rat + sur*sqrt(d).
// Invariant: disc == 0 (plain rational) implies sur == 0, and values with
// sur == 0 always normalize to disc == 0 so equality is plain value equality.
class Scalar {
public:
    Scalar() : rat_(0), sur_(0), disc_(0) {}
    Scalar(long long n) : rat_(static_cast<long>(n)), sur_(0), disc_(0) {}
    explicit Scalar(const mpq_class& q) : rat_(q), sur_(0), disc_(0) {}
    explicit Scalar(const mpz_class& z) : rat_(z), sur_(0), disc_(0) {}

    static Scalar rational(long long num, long long den) {
        if (den == 0) throw error("rational with zero denominator");
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return Scalar(q);
    }

    static Scalar with_surd(const mpq_class& rat, const mpq_class& sur, long long d) {
        if (!is_valid_discriminant(d)) throw error("invalid discriminant " + std::to_string(d));
        Scalar s;
        s.rat_ = rat;
        s.sur_ = sur;
        s.disc_ = (sur == 0) ? 0 : d;
        return s;
    }

    static Scalar sqrt_of(long long d) { return with_surd(0, 1, d); }

    const mpq_class& rational_part() const { return rat_; }
    const mpq_class& surd_part() const { return sur_; }
    long long discriminant() const { return disc_; }

    bool is_rational() const { return disc_ == 0; }
    bool is_zero() const { return rat_ == 0 && sur_ == 0; }
    bool is_integer() const { return disc_ == 0 && rat_.get_den() == 1; }
    bool is_half_integer() const {
        if (disc_ != 0) return false;
        mpq_class twice = rat_ * 2;
        return twice.get_den() == 1;
    }

    // Exact sign: when the two parts disagree, compare squares; a^2 - d*b^2
    // cannot vanish for b != 0 because sqrt(d) is irrational.
    int sign() const {
        int sr = sgn(rat_);
        int ss = sgn(sur_);
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        mpq_class q = rat_ * rat_ - mpq_class(static_cast<long>(disc_)) * sur_ * sur_;
        return sr * sgn(q);
    }

    Scalar conjugate() const {
        Scalar s(*this);
        s.sur_ = -s.sur_;
        return s;
    }

    // a^2 - d * b^2, always rational and zero only at zero.
    mpq_class norm() const {
        return rat_ * rat_ - mpq_class(static_cast<long>(disc_)) * sur_ * sur_;
    }

    Scalar operator-() const {
        Scalar s(*this);
        s.rat_ = -s.rat_;
        s.sur_ = -s.sur_;
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        long long d = combine_disc(a, b);
        return make(a.rat_ + b.rat_, a.sur_ + b.sur_, d);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        long long d = combine_disc(a, b);
        return make(a.rat_ - b.rat_, a.sur_ - b.sur_, d);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        long long d = combine_disc(a, b);
        mpq_class rat = a.rat_ * b.rat_;
        if (d != 0) rat += mpq_class(static_cast<long>(d)) * a.sur_ * b.sur_;
        mpq_class sur = a.rat_ * b.sur_ + a.sur_ * b.rat_;
        return make(rat, sur, d);
    }

    Scalar inverse() const {
        if (is_zero()) throw error("division by zero scalar");
        if (disc_ == 0) return Scalar(mpq_class(1 / rat_));
        mpq_class n = norm();
        return make(rat_ / n, -sur_ / n, disc_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.sur_ == b.sur_ && a.disc_ == b.disc_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const {
        double v = rat_.get_d();
        if (disc_ != 0) v += sur_.get_d() * std::sqrt(static_cast<double>(disc_));
        return v;
    }

    // Canonical literal: "p/q" or "p/q + r/s w" / "p/q - r/s w".
    std::string str() const {
        std::string out = rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
        if (disc_ != 0) {
            mpq_class s = sur_;
            out += (sgn(s) < 0) ? " - " : " + ";
            if (sgn(s) < 0) s = -s;
            out += s.get_num().get_str() + "/" + s.get_den().get_str() + " w";
        }
        return out;
    }

private:
    static long long combine_disc(const Scalar& a, const Scalar& b) {
        if (a.disc_ == 0) return b.disc_;
        if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
        throw error("discriminant mismatch: " + std::to_string(a.disc_) + " vs " +
                    std::to_string(b.disc_));
    }

    static Scalar make(const mpq_class& rat, const mpq_class& sur, long long d) {
        Scalar s;
        s.rat_ = rat;
        s.sur_ = sur;
        s.disc_ = (sur == 0) ? 0 : d;
        return s;
    }

    mpq_class rat_;
    mpq_class sur_;
    long long disc_;
};

// Ground field marker: d == 0 means plain Q.
struct Field {
    long long d = 0;
    bool is_rational() const { return d == 0; }
    friend bool operator==(const Field& a, const Field& b) { return a.d == b.d; }
    friend bool operator!=(const Field& a, const Field& b) { return a.d != b.d; }
};

inline void require_same_field(const Field& a, const Field& b) {
    if (a != b) {
        throw error("field mismatch: Q(sqrt " + std::to_string(a.d) + ") vs Q(sqrt " +
                    std::to_string(b.d) + ")");
    }
}

}  // namespace reallat
