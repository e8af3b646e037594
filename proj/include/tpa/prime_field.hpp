#ifndef tpa_prime_field_hpp
#define tpa_prime_field_hpp

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpa/errors.hpp"

namespace tpa {

constexpr uint64_t default_prime = 2147483647ull; // 2^31 - 1

// Arithmetic in F_p for a runtime prime p < 2^63.
class PrimeField {
public:
    explicit PrimeField(uint64_t p = default_prime) : p_(p) {
        if (p < 2 || p >= (1ull << 63) || !is_prime(p)) {
            throw input_error("field characteristic " + std::to_string(p) + " is not a usable prime");
        }
    }

    uint64_t prime() const { return p_; }

    uint64_t reduce(int64_t x) const {
        int64_t r = x % int64_t(p_);
        return uint64_t(r < 0 ? r + int64_t(p_) : r);
    }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return uint64_t((unsigned __int128)a * b % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const {
        if (a == 0) {
            throw std::domain_error("inverse of zero in F_p");
        }
        return pow(a, p_ - 2);
    }

    // uniform on F_p \ {0}
    template <class Rng>
    uint64_t random_nonzero(Rng& rng) const {
        std::uniform_int_distribution<uint64_t> dist(1, p_ - 1);
        return dist(rng);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    // deterministic Miller-Rabin, valid for all 64-bit inputs
    static bool is_prime(uint64_t n) {
        if (n < 4) {
            return n >= 2;
        }
        if (n % 2 == 0) {
            return false;
        }
        uint64_t d = n - 1;
        int s = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++s;
        }
        auto mulmod = [n](uint64_t a, uint64_t b) { return uint64_t((unsigned __int128)a * b % n); };
        for (uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            if (base % n == 0) {
                continue;
            }
            uint64_t x = 1, b = base % n, e = d;
            while (e) {
                if (e & 1) {
                    x = mulmod(x, b);
                }
                b = mulmod(b, b);
                e >>= 1;
            }
            if (x == 1 || x == n - 1) {
                continue;
            }
            bool composite = true;
            for (int r = 1; r < s; ++r) {
                x = mulmod(x, x);
                if (x == n - 1) {
                    composite = false;
                    break;
                }
            }
            if (composite) {
                return false;
            }
        }
        return true;
    }

    uint64_t p_;
};

// Dense row-major matrix over F_p; entries are kept reduced.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint64_t& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    uint64_t operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (uint64_t x : data_) {
            if (x) {
                return false;
            }
        }
        return true;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    Matrix multiply(const Matrix& other, const PrimeField& f) const {
        if (cols_ != other.rows_) {
            throw std::invalid_argument("matrix shape mismatch in product");
        }
        Matrix out(rows_, other.cols_);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t k = 0; k < cols_; ++k) {
                uint64_t a = (*this)(r, k);
                if (a == 0) {
                    continue;
                }
                for (size_t c = 0; c < other.cols_; ++c) {
                    out(r, c) = f.add(out(r, c), f.mul(a, other(k, c)));
                }
            }
        }
        return out;
    }

    // stacks rows of `below` under this matrix
    void append_rows(const Matrix& below) {
        if (rows_ == 0 && cols_ == 0) {
            cols_ = below.cols_;
        }
        if (below.cols_ != cols_) {
            throw std::invalid_argument("column mismatch when stacking matrices");
        }
        data_.insert(data_.end(), below.data_.begin(), below.data_.end());
        rows_ += below.rows_;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<uint64_t> data_;
};

/*
 * Gauss-Jordan elimination in place; returns the rank. Afterwards the first
 * `rank` rows are a reduced row echelon basis of the row space.
 */
inline size_t row_reduce(Matrix& m, const PrimeField& f) {
    size_t rank = 0;
    for (size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != rank) {
            for (size_t k = 0; k < m.cols(); ++k) {
                std::swap(m(pivot, k), m(rank, k));
            }
        }
        uint64_t scale = f.inv(m(rank, c));
        for (size_t k = c; k < m.cols(); ++k) {
            m(rank, k) = f.mul(m(rank, k), scale);
        }
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, c) == 0) {
                continue;
            }
            uint64_t factor = m(r, c);
            for (size_t k = c; k < m.cols(); ++k) {
                m(r, k) = f.sub(m(r, k), f.mul(factor, m(rank, k)));
            }
        }
        ++rank;
    }
    return rank;
}

inline size_t rank(Matrix m, const PrimeField& f) {
    return row_reduce(m, f);
}

inline size_t nullity(const Matrix& m, const PrimeField& f) {
    return m.cols() - rank(m, f);
}

// independent rows spanning the same space as the rows of m
inline Matrix row_basis(Matrix m, const PrimeField& f) {
    size_t r = row_reduce(m, f);
    Matrix basis(r, m.cols());
    for (size_t i = 0; i < r; ++i) {
        for (size_t c = 0; c < m.cols(); ++c) {
            basis(i, c) = m(i, c);
        }
    }
    return basis;
}

}

#endif /* tpa_prime_field_hpp */
