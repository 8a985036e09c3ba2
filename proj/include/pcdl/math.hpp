#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcdl {

using Vec = std::vector<double>;

// Dense row-major matrix. Network weights are stored input-major
// (rows = fan-in), so the forward pass accumulates over contiguous rows.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    double* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
    const double* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }
    bool empty() const { return a.empty(); }
    size_t size() const { return a.size(); }
};

inline double dot(const double* x, const double* y, int n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
        s2 += x[i + 2] * y[i + 2];
        s3 += x[i + 3] * y[i + 3];
    }
    for (; i < n; ++i) s0 += x[i] * y[i];
    return (s0 + s1) + (s2 + s3);
}

inline double dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    return dot(x.data(), y.data(), static_cast<int>(x.size()));
}

inline void axpy(double a, const double* x, double* y, int n) {
    for (int i = 0; i < n; ++i) y[i] += a * x[i];
}

inline double norm2(const Vec& x) { return std::sqrt(dot(x.data(), x.data(), static_cast<int>(x.size()))); }

inline double sq_dist(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sq_dist: size mismatch");
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline bool all_finite(const Vec& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic PRNG. All randomness in the artifact flows through this
// wrapper so draws can be counted and sub-streams forked from one seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

    // raw 53-bit uniform in [0, 1)
    double uniform() {
        ++draws_;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
        const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
        ++draws_;
        return lo + static_cast<int>(gen_() % span);
    }

    // Box-Muller; two uniforms per draw, no caching so draw counts stay exact
    double normal() {
        const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        draws_ += 2;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    void fill_normal(Vec& v) {
        for (double& x : v) x = normal();
    }

    Vec normal_vec(int n) {
        Vec v(n);
        fill_normal(v);
        return v;
    }

    // Fisher-Yates over an index vector
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform_int(0, i)]);
        return p;
    }

    // independent sub-stream; stable under changes to sibling streams
    Rng fork(uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x51ed2701ULL))); }

    uint64_t draws() const { return draws_; }
    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
    uint64_t draws_ = 0;
};

// Cyclic Jacobi eigendecomposition for small symmetric matrices.
// Returns eigenvalues and the orthogonal matrix v with a = v * diag(w) * v^T.
inline void sym_eig(Mat a, Vec& w, Mat& v, int max_sweeps = 100) {
    if (a.rows != a.cols) throw std::invalid_argument("sym_eig: matrix not square");
    const int n = a.rows;
    v = Mat(n, n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-26 * n * n) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    w.resize(n);
    for (int i = 0; i < n; ++i) w[i] = a(i, i);
}

// Symmetric matrix square root; negative eigenvalues clamp to zero.
inline Mat sym_sqrt(const Mat& m) {
    Vec w;
    Mat v;
    sym_eig(m, w, v);
    const int n = m.rows;
    Mat out(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = w[k] > 0 ? std::sqrt(w[k]) : 0.0;
        if (s == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const double vis = v(i, k) * s;
            for (int j = 0; j < n; ++j) out(i, j) += vis * v(j, k);
        }
    }
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            axpy(aik, b.row(k), c.row(i), b.cols);
        }
    return c;
}

inline double trace(const Mat& m) {
    double t = 0;
    for (int i = 0; i < m.rows; ++i) t += m(i, i);
    return t;
}

}  // namespace pcdl
