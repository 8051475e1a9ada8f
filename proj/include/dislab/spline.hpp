#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dislab {

// Natural cubic spline through (x_i, y_i), x strictly increasing.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        const size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw std::invalid_argument("CubicSpline: bad node data");
        m_.assign(n, 0.0);
        if (n == 2) return;
        // tridiagonal solve for second derivatives (natural boundary)
        std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            const double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
            sub[i] = hl;
            diag[i] = 2.0 * (hl + hr);
            rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
        }
        for (size_t i = 2; i + 1 < n; ++i) {
            const double w = sub[i] / diag[i - 1];
            diag[i] -= w * (x_[i] - x_[i - 1]);
            rhs[i] -= w * rhs[i - 1];
        }
        for (size_t i = n - 2; i >= 1; --i) {
            const double hr = x_[i + 1] - x_[i];
            m_[i] = (rhs[i] - (i + 2 < n ? hr * m_[i + 1] : 0.0)) / diag[i];
            if (i == 1) break;
        }
    }

    double min_x() const { return x_.front(); }
    double max_x() const { return x_.back(); }

    double operator()(double x) const {
        if (x <= x_.front()) x = x_.front();
        if (x >= x_.back()) x = x_.back();
        const size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - x) / h, b = (x - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
    }

    double derivative(double x) const {
        if (x <= x_.front()) x = x_.front();
        if (x >= x_.back()) x = x_.back();
        const size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - x) / h, b = (x - x_[i]) / h;
        return (y_[i + 1] - y_[i]) / h +
               ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) * h / 6.0;
    }

  private:
    size_t segment(double x) const {
        auto it = std::upper_bound(x_.begin(), x_.end(), x);
        size_t i = static_cast<size_t>(it - x_.begin());
        if (i == 0) i = 1;
        if (i >= x_.size()) i = x_.size() - 1;
        return i - 1;
    }

    std::vector<double> x_, y_, m_;
};

// Radial profile tabulated on log-spaced radii, with optional exact analytic
// tail beyond max radius. Evaluation clamps below r_min (profiles used here are
// continuous at 0 or only queried above the resolved scale).
class RadialTable {
  public:
    RadialTable() = default;

    template <class F>
    static RadialTable build(F&& f, double r_min, double r_max, int n_nodes) {
        if (!(r_min > 0.0) || !(r_max > r_min) || n_nodes < 8)
            throw std::invalid_argument("RadialTable::build: bad parameters");
        std::vector<double> u(n_nodes), v(n_nodes);
        const double u0 = std::log(r_min), u1 = std::log(r_max);
        for (int i = 0; i < n_nodes; ++i) {
            u[i] = u0 + (u1 - u0) * i / (n_nodes - 1.0);
            v[i] = f(std::exp(u[i]));
        }
        RadialTable t;
        t.spline_ = CubicSpline(std::move(u), std::move(v));
        t.r_min_ = r_min;
        t.r_max_ = r_max;
        return t;
    }

    double operator()(double r) const { return spline_(std::log(std::max(r, r_min_))); }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    bool valid() const { return r_max_ > 0.0; }

  private:
    CubicSpline spline_;
    double r_min_ = 0.0, r_max_ = 0.0;
};

// Radial profile on uniform nodes over [0, r_max] (for profiles smooth at 0).
class UniformRadialTable {
  public:
    UniformRadialTable() = default;

    template <class F>
    static UniformRadialTable build(F&& f, double r_max, int n_nodes) {
        std::vector<double> x(n_nodes), y(n_nodes);
        for (int i = 0; i < n_nodes; ++i) {
            x[i] = r_max * i / (n_nodes - 1.0);
            y[i] = f(x[i]);
        }
        UniformRadialTable t;
        t.spline_ = CubicSpline(std::move(x), std::move(y));
        t.r_max_ = r_max;
        return t;
    }

    double operator()(double r) const { return spline_(r); }
    double r_max() const { return r_max_; }
    bool valid() const { return r_max_ > 0.0; }

  private:
    CubicSpline spline_;
    double r_max_ = 0.0;
};

}  // namespace dislab
