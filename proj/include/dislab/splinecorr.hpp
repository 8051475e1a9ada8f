#pragma once

#include "dislab/grid.hpp"
#include "dislab/vec2.hpp"

namespace dislab {

// centered cubic B-spline (beta_1 * beta_1), support [-2, 2], unit integral
inline double bspline3(double t) {
    t = std::abs(t);
    if (t >= 2.0) return 0.0;
    if (t >= 1.0) {
        const double u = 2.0 - t;
        return u * u * u / 6.0;
    }
    return (4.0 - 6.0 * t * t + 3.0 * t * t * t) / 6.0;
}

// Exact cross-correlation of the two piecewise-bilinear interpolants W~s, W~t of
// sample arrays ws, wt on a common grid of spacing h:
//
//   C(x) = (conj-flip(W~s) * W~t)(x) = h^2 sum_d g[d] B3(x1/h - d1) B3(x2/h - d2),
//   g[d] = sum_j ws[j] wt[j + d].
//
// Because C is the correlation of actual L^2 functions, the pairwise quadratic
// form sum_{i,j} C(x_i - x_j) is nonnegative to roundoff for any point set,
// uniformly across all species pairs built from the same sample arrays.
class BsplineCorrelation {
  public:
    BsplineCorrelation() = default;

    static BsplineCorrelation build(const Array2& ws, const Array2& wt, double h) {
        BsplineCorrelation c;
        c.g_ = fft_correlate_full(ws, wt);
        c.off_x_ = ws.nx - 1;
        c.off_y_ = ws.ny - 1;
        c.h_ = h;
        return c;
    }

    bool valid() const { return h_ > 0.0; }
    double spacing() const { return h_; }

    double operator()(const Vec2& x) const {
        const double ux = x.x / h_, uy = x.y / h_;
        const int ix = static_cast<int>(std::floor(ux)), iy = static_cast<int>(std::floor(uy));
        double wx[4], wy[4];
        for (int m = 0; m < 4; ++m) {
            wx[m] = bspline3(ux - (ix - 1 + m));
            wy[m] = bspline3(uy - (iy - 1 + m));
        }
        double s = 0.0;
        for (int my = 0; my < 4; ++my) {
            const int dy = iy - 1 + my + off_y_;
            if (dy < 0 || dy >= g_.ny || wy[my] == 0.0) continue;
            double row = 0.0;
            for (int mx = 0; mx < 4; ++mx) {
                const int dx = ix - 1 + mx + off_x_;
                if (dx < 0 || dx >= g_.nx || wx[mx] == 0.0) continue;
                row += wx[mx] * g_.at(dx, dy);
            }
            s += row * wy[my];
        }
        return s * h_ * h_;
    }

  private:
    Array2 g_;
    int off_x_ = 0, off_y_ = 0;
    double h_ = 0.0;
};

}  // namespace dislab
