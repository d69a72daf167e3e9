#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace laqw {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Minimal dense complex matrix, row-major. Only used on small dimensions
// (operator oracles, circuit cross-validation), never on the hot path.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CMat dagger() const {
        CMat m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    cvec apply(const cvec& v) const {
        cvec out(rows_, cplx{0.0, 0.0});
        for (std::size_t r = 0; r < rows_; ++r) {
            cplx acc{0.0, 0.0};
            const cplx* row = &a_[r * cols_];
            for (std::size_t c = 0; c < cols_; ++c) acc += row[c] * v[c];
            out[r] = acc;
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    cvec a_;
};

inline CMat matmul(const CMat& a, const CMat& b) {
    CMat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
        }
    return out;
}

inline double max_abs_diff(const CMat& a, const CMat& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double norm2(const cvec& v) {
    double acc = 0.0;
    for (const auto& a : v) acc += std::norm(a);
    return std::sqrt(acc);
}

// Largest |(A A† - I)_{ij}|; zero for a unitary matrix.
inline double unitarity_defect(const CMat& a) {
    return max_abs_diff(matmul(a, a.dagger()), CMat::identity(a.rows()));
}

// DFT matrix F[j,k] = exp(-2*pi*i*j*k/N)/sqrt(N).  With Omega = diag(w^k),
// w = exp(2*pi*i/N), the cyclic increment satisfies P1 = F Omega F†.
inline CMat dft_matrix(std::size_t n) {
    CMat f(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double phi = -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n);
            f(j, k) = s * cplx{std::cos(phi), std::sin(phi)};
        }
    return f;
}

// Omega^{±1} = diag(w^{±k}).
inline CMat omega_matrix(std::size_t n, int sign) {
    CMat d(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        d(k, k) = cplx{std::cos(phi), std::sin(phi)};
    }
    return d;
}

} // namespace laqw
