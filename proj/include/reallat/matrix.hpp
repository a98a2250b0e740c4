#pragma once

#include <initializer_list>
#include <vector>

#include "reallat/scalar.hpp"

namespace reallat {

// Dense matrix over Q(sqrt d) with value semantics: no public mutators,
// operations return fresh objects.  Entries of a single matrix may not mix
// two different discriminants.
class Mat {
public:
    Mat() : m_(0), n_(0) {}
    Mat(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) { check_shape(); }

    static Mat from_entries(int m, int n, std::vector<Scalar> e) {
        Mat a(m, n);
        if (e.size() != a.e_.size()) throw error("entry count does not match shape");
        a.e_ = std::move(e);
        a.context();  // reject mixed discriminants eagerly
        return a;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
        int m = static_cast<int>(rows.size());
        int n = m == 0 ? 0 : static_cast<int>(rows.begin()->size());
        std::vector<Scalar> e;
        e.reserve(static_cast<size_t>(m) * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw error("ragged rows");
            for (const auto& v : r) e.push_back(v);
        }
        return from_entries(m, n, std::move(e));
    }

    static Mat identity(int n) {
        Mat a(n, n);
        for (int i = 0; i < n; ++i) a.e_[idx(a, i, i)] = Scalar(1);
        return a;
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    bool is_square() const { return m_ == n_; }

    const Scalar& operator()(int i, int j) const { return e_[idx(*this, i, j)]; }

    std::vector<Scalar> entries_copy() const { return e_; }

    // Discriminant shared by all surd-carrying entries (0 if none).
    long long context() const {
        long long d = 0;
        for (const auto& v : e_) {
            if (v.discriminant() == 0) continue;
            if (d == 0) {
                d = v.discriminant();
            } else if (d != v.discriminant()) {
                throw error("mixed discriminants in one matrix");
            }
        }
        return d;
    }

    bool is_rational() const { return context() == 0; }

    bool is_integral() const {
        for (const auto& v : e_) {
            if (!v.is_integer()) return false;
        }
        return true;
    }

    Mat transpose() const {
        Mat a(n_, m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) a.e_[idx(a, j, i)] = (*this)(i, j);
        }
        return a;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        require_shape(a, b);
        Mat c(a.m_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        require_shape(a, b);
        Mat c(a.m_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }
    Mat operator-() const {
        Mat c(m_, n_);
        for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = -e_[k];
        return c;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.n_ != b.m_) throw error("matrix product shape mismatch");
        Mat c(a.m_, b.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int k = 0; k < a.n_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.n_; ++j) {
                    c.e_[idx(c, i, j)] += aik * b(k, j);
                }
            }
        }
        return c;
    }
    friend Mat operator*(const Scalar& s, const Mat& a) {
        Mat c(a.m_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : e_) {
            if (!v.is_zero()) return false;
        }
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < m_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) return false;
            }
        }
        return true;
    }

    bool is_antisymmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < m_; ++i) {
            for (int j = i; j < n_; ++j) {
                if ((*this)(i, j) != -(*this)(j, i)) return false;
            }
        }
        return true;
    }

    Mat submat(int r0, int c0, int r, int c) const {
        if (r0 < 0 || c0 < 0 || r0 + r > m_ || c0 + c > n_) throw error("submatrix out of range");
        Mat a(r, c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) a.e_[idx(a, i, j)] = (*this)(r0 + i, c0 + j);
        }
        return a;
    }

    Mat col(int j) const { return submat(0, j, m_, 1); }

    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.m_ != b.m_) throw error("hcat row mismatch");
        Mat c(a.m_, a.n_ + b.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int j = 0; j < a.n_; ++j) c.e_[idx(c, i, j)] = a(i, j);
            for (int j = 0; j < b.n_; ++j) c.e_[idx(c, i, a.n_ + j)] = b(i, j);
        }
        return c;
    }

    static Mat vcat(const Mat& a, const Mat& b) {
        if (a.n_ != b.n_) throw error("vcat column mismatch");
        Mat c(a.m_ + b.m_, a.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int j = 0; j < a.n_; ++j) c.e_[idx(c, i, j)] = a(i, j);
        }
        for (int i = 0; i < b.m_; ++i) {
            for (int j = 0; j < b.n_; ++j) c.e_[idx(c, a.m_ + i, j)] = b(i, j);
        }
        return c;
    }

    static Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
        return vcat(hcat(a, b), hcat(c, d));
    }

private:
    static size_t idx(const Mat& a, int i, int j) {
        if (i < 0 || j < 0 || i >= a.m_ || j >= a.n_) throw error("matrix index out of range");
        return static_cast<size_t>(i) * a.n_ + j;
    }
    static void require_shape(const Mat& a, const Mat& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) throw error("matrix shape mismatch");
    }
    void check_shape() const {
        if (m_ < 0 || n_ < 0) throw error("negative matrix shape");
    }

    int m_, n_;
    std::vector<Scalar> e_;
};

// Dense integer matrix (arbitrary precision), same value discipline.
class IMat {
public:
    IMat() : m_(0), n_(0) {}
    IMat(int m, int n) : m_(m), n_(n), e_(static_cast<size_t>(m) * n) {
        if (m < 0 || n < 0) throw error("negative matrix shape");
    }

    static IMat from_entries(int m, int n, std::vector<mpz_class> e) {
        IMat a(m, n);
        if (e.size() != a.e_.size()) throw error("entry count does not match shape");
        a.e_ = std::move(e);
        return a;
    }

    static IMat from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        int m = static_cast<int>(rows.size());
        int n = m == 0 ? 0 : static_cast<int>(rows.begin()->size());
        std::vector<mpz_class> e;
        e.reserve(static_cast<size_t>(m) * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw error("ragged rows");
            for (long long v : r) e.push_back(mpz_class(static_cast<long>(v)));
        }
        return from_entries(m, n, std::move(e));
    }

    static IMat identity(int n) {
        IMat a(n, n);
        for (int i = 0; i < n; ++i) a.e_[idx(a, i, i)] = 1;
        return a;
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    bool is_square() const { return m_ == n_; }

    const mpz_class& operator()(int i, int j) const { return e_[idx(*this, i, j)]; }

    std::vector<mpz_class> entries_copy() const { return e_; }

    friend IMat operator*(const IMat& a, const IMat& b) {
        if (a.n_ != b.m_) throw error("matrix product shape mismatch");
        IMat c(a.m_, b.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int k = 0; k < a.n_; ++k) {
                const mpz_class& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.n_; ++j) {
                    c.e_[idx(c, i, j)] += aik * b(k, j);
                }
            }
        }
        return c;
    }
    friend IMat operator+(const IMat& a, const IMat& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) throw error("matrix shape mismatch");
        IMat c(a.m_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend IMat operator-(const IMat& a, const IMat& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) throw error("matrix shape mismatch");
        IMat c(a.m_, a.n_);
        for (size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }
    IMat operator-() const {
        IMat c(m_, n_);
        for (size_t k = 0; k < e_.size(); ++k) c.e_[k] = -e_[k];
        return c;
    }

    friend bool operator==(const IMat& a, const IMat& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IMat& a, const IMat& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : e_) {
            if (v != 0) return false;
        }
        return true;
    }

    IMat transpose() const {
        IMat a(n_, m_);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) a.e_[idx(a, j, i)] = (*this)(i, j);
        }
        return a;
    }

    IMat submat(int r0, int c0, int r, int c) const {
        if (r0 < 0 || c0 < 0 || r0 + r > m_ || c0 + c > n_) throw error("submatrix out of range");
        IMat a(r, c);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < c; ++j) a.e_[idx(a, i, j)] = (*this)(r0 + i, c0 + j);
        }
        return a;
    }

    static IMat hcat(const IMat& a, const IMat& b) {
        if (a.m_ != b.m_) throw error("hcat row mismatch");
        IMat c(a.m_, a.n_ + b.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int j = 0; j < a.n_; ++j) c.e_[idx(c, i, j)] = a(i, j);
            for (int j = 0; j < b.n_; ++j) c.e_[idx(c, i, a.n_ + j)] = b(i, j);
        }
        return c;
    }

    static IMat vcat(const IMat& a, const IMat& b) {
        if (a.n_ != b.n_) throw error("vcat column mismatch");
        IMat c(a.m_ + b.m_, a.n_);
        for (int i = 0; i < a.m_; ++i) {
            for (int j = 0; j < a.n_; ++j) c.e_[idx(c, i, j)] = a(i, j);
        }
        for (int i = 0; i < b.m_; ++i) {
            for (int j = 0; j < b.n_; ++j) c.e_[idx(c, a.m_ + i, j)] = b(i, j);
        }
        return c;
    }

    Mat to_mat() const {
        std::vector<Scalar> e;
        e.reserve(e_.size());
        for (const auto& v : e_) e.emplace_back(v);
        return Mat::from_entries(m_, n_, std::move(e));
    }

private:
    static size_t idx(const IMat& a, int i, int j) {
        if (i < 0 || j < 0 || i >= a.m_ || j >= a.n_) throw error("matrix index out of range");
        return static_cast<size_t>(i) * a.n_ + j;
    }

    int m_, n_;
    std::vector<mpz_class> e_;
};

}  // namespace reallat
