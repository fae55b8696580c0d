#pragma once

// Dense row-major value carriers. All internal arithmetic is double;
// float is only ever a storage format (see round_to_f32 helpers).

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbt/rng.hpp"

namespace bbt {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), a(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    double* row(std::size_t r) { return a.data() + r * cols; }
    const double* row(std::size_t r) const { return a.data() + r * cols; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    bool same_shape(const Matrix& o) const {
        return rows == o.rows && cols == o.cols;
    }
};

// N-d tensor for the file boundary; math code uses Matrix / vectors.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> data;

    std::size_t size() const {
        std::size_t n = 1;
        for (auto s : shape) n *= s;
        return n;
    }

    void check() const {
        if (size() != data.size())
            throw std::runtime_error("tensor shape/data size mismatch");
        for (double v : data)
            if (!std::isfinite(v))
                throw std::runtime_error("tensor contains non-finite value");
    }
};

inline Matrix random_gaussian_matrix(std::size_t rows, std::size_t cols,
                                     Rng& rng, double scale = 1.0) {
    Matrix m(rows, cols);
    for (double& v : m.a) v = scale * rng.gaussian();
    return m;
}

inline std::vector<double> random_gaussian_vector(std::size_t n, Rng& rng,
                                                  double mean = 0.0,
                                                  double scale = 1.0) {
    std::vector<double> v(n);
    for (double& x : v) x = mean + scale * rng.gaussian();
    return v;
}

// max |a-b| / max |b|; 0 if both sides are identically zero
inline double rel_err(const std::vector<double>& a,
                      const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("rel_err: size mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::abs(a[i] - b[i]));
        den = std::max(den, std::abs(b[i]));
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
    return num / den;
}

inline double rel_err(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("rel_err: shape mismatch");
    return rel_err(a.a, b.a);
}

// round-trip through IEEE binary32, the storage precision of the file formats
inline double round_to_f32(double x) {
    return static_cast<double>(static_cast<float>(x));
}

inline void round_to_f32(std::vector<double>& v) {
    for (double& x : v) x = round_to_f32(x);
}

inline void round_to_f32(Matrix& m) { round_to_f32(m.a); }

} // namespace bbt
