#pragma once

#include <cmath>
#include <stdexcept>

namespace dislab {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    // clockwise rotation by pi/2 (the b^perp convention for Burgers vectors)
    Vec2 perp_cw() const { return {y, -x}; }
    // counter-clockwise rotation by pi/2
    Vec2 perp_ccw() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// unit vector at angle t from e1
inline Vec2 unit(double t) { return {std::cos(t), std::sin(t)}; }

// angle in [0, 2*pi)
inline double angle_of(const Vec2& v) {
    double t = std::atan2(v.y, v.x);
    if (t < 0.0) t += 2.0 * kPi;
    return t;
}

struct Mat2 {
    // row-major entries
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    Mat2() = default;
    Mat2(double m11, double m12, double m21, double m22)
        : a11(m11), a12(m12), a21(m21), a22(m22) {}

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 outer(const Vec2& u, const Vec2& v) {
        return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
    }
    static Mat2 rotation(double t) {
        const double c = std::cos(t), s = std::sin(t);
        return {c, -s, s, c};
    }

    Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    Mat2& operator+=(const Mat2& o) { a11 += o.a11; a12 += o.a12; a21 += o.a21; a22 += o.a22; return *this; }

    Mat2 mul(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Vec2 mul(const Vec2& v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }

    double trace() const { return a11 + a22; }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    Mat2 sym() const { return {a11, 0.5 * (a12 + a21), 0.5 * (a12 + a21), a22}; }
    // Frobenius inner product A:B
    double ddot(const Mat2& o) const { return a11 * o.a11 + a12 * o.a12 + a21 * o.a21 + a22 * o.a22; }
    double frob_norm() const { return std::sqrt(ddot(*this)); }
    bool is_symmetric(double tol = 1e-12) const {
        return std::abs(a12 - a21) <= tol * (1.0 + frob_norm());
    }
};

inline Mat2 operator*(double s, const Mat2& m) { return m * s; }

struct LameParameters {
    double lambda = 1.0;
    double mu = 1.0;

    LameParameters() = default;
    LameParameters(double lambda_, double mu_) : lambda(lambda_), mu(mu_) {
        if (!(mu > 0.0) || !(lambda + mu > 0.0))
            throw std::domain_error("LameParameters: require mu > 0 and lambda + mu > 0");
    }

    // mu (lambda + mu) / (pi (lambda + 2 mu)), the elastic prefactor of the edge kernel
    double edge_prefactor() const { return mu * (lambda + mu) / (kPi * (lambda + 2.0 * mu)); }
};

// C F = lambda (tr F) Id + 2 mu sym F
inline Mat2 elasticity_apply(const Mat2& f, const LameParameters& lame) {
    const double t = lame.lambda * f.trace();
    Mat2 s = f.sym() * (2.0 * lame.mu);
    s.a11 += t;
    s.a22 += t;
    return s;
}

// D with D^2 = C on symmetric matrices: sqrt(2(lambda+mu)) on span{Id},
// sqrt(2 mu) on trace-free symmetric matrices.
inline Mat2 elasticity_sqrt_apply(const Mat2& f, const LameParameters& lame, double sym_tol = 1e-10) {
    if (!f.is_symmetric(sym_tol))
        throw std::domain_error("elasticity_sqrt_apply: F must be symmetric");
    const double half_tr = 0.5 * f.trace();
    const Mat2 dev{f.a11 - half_tr, 0.5 * (f.a12 + f.a21), 0.5 * (f.a12 + f.a21), f.a22 - half_tr};
    const double ci = std::sqrt(2.0 * (lame.lambda + lame.mu)) * half_tr;
    Mat2 out = dev * std::sqrt(2.0 * lame.mu);
    out.a11 += ci;
    out.a22 += ci;
    return out;
}

// Burgers angle canonicalised to [0, 2*pi)
struct BurgersAngle {
    double phi = 0.0;

    BurgersAngle() = default;
    explicit BurgersAngle(double phi_) {
        phi = std::fmod(phi_, 2.0 * kPi);
        if (phi < 0.0) phi += 2.0 * kPi;
    }
    Vec2 vector() const { return unit(phi); }
};

}  // namespace dislab
