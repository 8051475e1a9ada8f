#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dislab/vec2.hpp"

namespace dislab {

struct Box {
    Vec2 lo{-1.0, -1.0};
    Vec2 hi{1.0, 1.0};

    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    bool contains(const Vec2& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    Box inflated(double margin) const {
        return {{lo.x - margin, lo.y - margin}, {hi.x + margin, hi.y + margin}};
    }
    bool degenerate() const { return !(hi.x > lo.x) || !(hi.y > lo.y); }
};

// dense row-major real 2-D array
struct Array2 {
    int nx = 0, ny = 0;
    std::vector<double> v;

    Array2() = default;
    Array2(int nx_, int ny_) : nx(nx_), ny(ny_), v(static_cast<size_t>(nx_) * ny_, 0.0) {}

    double& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
    double at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }
    size_t size() const { return v.size(); }
};

// Full linear cross-correlation: out[d] = sum_j a[j] * b[j + d], with
// d_x in [-(a.nx-1), b.nx-1]; out.at(d_x + a.nx - 1, d_y + a.ny - 1).
Array2 fft_correlate_full(const Array2& a, const Array2& b);

// Full linear convolution: out[k] = sum_j a[j] * b[k - j];
// out index k = (k_x, k_y), k_x in [0, a.nx + b.nx - 2].
Array2 fft_convolve_full(const Array2& a, const Array2& b);

// next power of two >= n
int next_pow2(int n);

}  // namespace dislab
