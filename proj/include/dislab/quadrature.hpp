#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dislab/vec2.hpp"

namespace dislab::quad {

// Raised when adaptive refinement exhausts its budget before reaching the
// requested accuracy.
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule of order n (cached, thread-safe after first use)
const GaussRule& gauss_rule(int n);

double gauss_panel(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive 1-D integration on [a, b] for smooth or mildly kinked integrands.
// Splits panels until the G(n)/G(2n) difference is below tol (absolute).
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    double abs_tol, int max_depth = 14);

// Integral of g over [lo, hi] where g(rho) ~ rho^{1-sigma} near rho = 0
// (polar-jacobian form of a |z|^{-sigma} kernel, 0 <= sigma < 2).
// break_radii: known non-smooth points of g; panels never straddle them.
double radial_integrate(const std::function<double(double)>& g, double lo, double hi,
                        double sigma, const std::vector<double>& break_radii, int pts = 12);

// ----------------------------------------------------------------------------
// Polar integration over an intersection of disks (and an optional halfplane),
// expanded about a pole where the integrand may blow up like |z - pole|^{-sigma}.

struct Ball {
    Vec2 c;
    double R = 1.0;
};

struct Halfplane {
    // constraint (z - m) . d <= 0
    Vec2 m;
    Vec2 d;
};

struct PolarDomain {
    Vec2 pole;
    std::vector<Ball> inside;            // z must lie in every one of these
    std::optional<Halfplane> halfplane;
    std::vector<Ball> break_circles;     // add radial breakpoints, no constraint
};

struct PolarOptions {
    double abs_tol = 1e-8;
    int max_depth = 11;
    int radial_pts = 12;
    bool throw_on_budget = true;
};

struct PolarResult {
    double value = 0.0;
    double err_estimate = 0.0;
    bool converged = true;
};

// Integrates f over the domain. sigma bounds the pole singularity strength.
PolarResult polar_integrate(const std::function<double(const Vec2&)>& f,
                            const PolarDomain& dom, double sigma,
                            const PolarOptions& opt = {});

// Integral over the exterior |z - pole| > R of an integrand that decays like
// |z|^{-decay} (decay > 2), smooth out there. Uses the inversion u = R/rho and
// a trapezoid rule in angle.
double exterior_integrate(const std::function<double(const Vec2&)>& f, const Vec2& pole,
                          double R, double decay, double abs_tol, int angular_pts = 64);

}  // namespace dislab::quad
