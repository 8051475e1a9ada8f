#include "dislab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace dislab::quad {

namespace {

GaussRule make_gauss(int n) {
    // Legendre roots by Newton iteration on P_n
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

std::mutex g_rule_mutex;
std::map<int, GaussRule> g_rules;

}  // namespace

const GaussRule& gauss_rule(int n) {
    std::lock_guard<std::mutex> lk(g_rule_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, make_gauss(n)).first;
    return it->second;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& r = gauss_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double coarse,
                 double tol, int depth, int max_depth) {
    const double fine = gauss_panel(f, a, b, 20);
    if (std::abs(fine - coarse) <= tol || depth >= max_depth) return fine;
    const double m = 0.5 * (a + b);
    const double cl = gauss_panel(f, a, m, 10);
    const double cr = gauss_panel(f, m, b, 10);
    return adapt_rec(f, a, m, cl, 0.5 * tol, depth + 1, max_depth) +
           adapt_rec(f, m, b, cr, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate_1d(const std::function<double(double)>& f, double a, double b, double abs_tol,
                    int max_depth) {
    if (!(b > a)) return 0.0;
    return adapt_rec(f, a, b, gauss_panel(f, a, b, 10), abs_tol, 0, max_depth);
}

double radial_integrate(const std::function<double(double)>& g, double lo, double hi, double sigma,
                        const std::vector<double>& break_radii, int pts) {
    if (!(hi > lo)) return 0.0;
    std::vector<double> brk;
    for (double r : break_radii)
        if (r > lo * (1.0 + 1e-14) && r < hi * (1.0 - 1e-14)) brk.push_back(r);
    brk.push_back(hi);
    std::sort(brk.begin(), brk.end());

    double total = 0.0;
    double a = lo;
    for (double b : brk) {
        if (!(b > a)) continue;
        if (a <= 1e-300) {
            // panel touching the pole: geometric panels down to rho_c, then the
            // nearly-pure-power core via rho = rho_c * t^kappa, which maps the
            // rho^{1-sigma} behaviour to t^{kappa(2-sigma)-1}
            const double rho_c = b * std::pow(0.5, 20);
            double p1 = b;
            for (int m = 0; m < 20; ++m) {
                const double p0 = 0.5 * p1;
                total += gauss_panel(g, p0, p1, pts);
                p1 = p0;
            }
            const double kap = std::max(1.0, std::ceil(2.0 / std::max(2.0 - sigma, 0.05)));
            auto sub = [&](double t) {
                const double rho = rho_c * std::pow(t, kap);
                return g(rho) * rho_c * kap * std::pow(t, kap - 1.0);
            };
            total += gauss_panel(sub, 0.0, 0.5, pts) + gauss_panel(sub, 0.5, 1.0, pts);
        } else {
            // geometric panels from a upward (resolves power-law behaviour)
            double p0 = a;
            while (p0 < b * (1.0 - 1e-15)) {
                const double p1 = std::min(b, p0 * 2.0);
                total += gauss_panel(g, p0, p1, pts);
                p0 = p1;
            }
        }
        a = b;
    }
    return total;
}

namespace {

struct RayInterval {
    double lo = 0.0, hi = 0.0;
    bool empty = true;
    std::vector<double> breaks;
};

// intersection of the ray pole + rho*omega (rho >= 0) with the domain
RayInterval ray_clip(const PolarDomain& dom, const Vec2& omega) {
    RayInterval iv;
    double lo = 0.0, hi = 1e300;
    for (const Ball& b : dom.inside) {
        const Vec2 d = b.c - dom.pole;
        const double pd = omega.dot(d);
        const double disc = pd * pd - d.norm2() + b.R * b.R;
        if (disc < 0.0) return iv;
        const double s = std::sqrt(disc);
        lo = std::max(lo, pd - s);
        hi = std::min(hi, pd + s);
    }
    if (dom.halfplane) {
        const double od = omega.dot(dom.halfplane->d);
        const double c0 = (dom.halfplane->m - dom.pole).dot(dom.halfplane->d);
        if (od > 1e-15) {
            if (c0 < 0.0) return iv;
            hi = std::min(hi, c0 / od);
        } else if (od < -1e-15) {
            if (c0 < 0.0) lo = std::max(lo, c0 / od);
        } else if (c0 < 0.0) {
            return iv;
        }
    }
    if (hi <= lo) return iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.empty = false;
    for (const Ball& b : dom.break_circles) {
        const Vec2 d = b.c - dom.pole;
        const double pd = omega.dot(d);
        const double disc = pd * pd - d.norm2() + b.R * b.R;
        if (disc <= 0.0) continue;
        const double s = std::sqrt(disc);
        if (pd - s > lo && pd - s < hi) iv.breaks.push_back(pd - s);
        if (pd + s > lo && pd + s < hi) iv.breaks.push_back(pd + s);
    }
    return iv;
}

// angles where the ray-clipping structure changes (tangencies, halfplane edges)
std::vector<double> angular_breaks(const PolarDomain& dom) {
    std::vector<double> br;
    auto add_ball = [&](const Ball& b) {
        const Vec2 d = b.c - dom.pole;
        const double L = d.norm();
        if (L <= 1e-15) return;
        const double ac = angle_of(d);
        if (L > b.R) {
            const double half = std::asin(std::min(1.0, b.R / L));
            br.push_back(ac - half);
            br.push_back(ac + half);
        } else {
            br.push_back(ac);
            br.push_back(ac + kPi);
        }
    };
    for (const Ball& b : dom.inside) add_ball(b);
    for (const Ball& b : dom.break_circles) add_ball(b);
    if (dom.halfplane) {
        const double ad = angle_of(dom.halfplane->d);
        br.push_back(ad + 0.5 * kPi);
        br.push_back(ad - 0.5 * kPi);
        br.push_back(ad);
    }
    for (double& a : br) {
        a = std::fmod(a, 2.0 * kPi);
        if (a < 0.0) a += 2.0 * kPi;
    }
    br.push_back(0.0);
    br.push_back(2.0 * kPi);
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             br.end());
    return br;
}

struct AngularWorker {
    const std::function<double(const Vec2&)>* f;
    const PolarDomain* dom;
    double sigma;
    int radial_pts;

    double line(double alpha) const {
        const Vec2 omega = unit(alpha);
        const RayInterval iv = ray_clip(*dom, omega);
        if (iv.empty) return 0.0;
        auto g = [&](double rho) { return (*f)(dom->pole + rho * omega) * rho; };
        return radial_integrate(g, iv.lo, iv.hi, sigma, iv.breaks, radial_pts);
    }

    // adaptive panel integration of line() over [a, b]
    void panel(double a, double b, double coarse, double tol, int depth, int max_depth,
               double& acc, double& err) const {
        auto fn = [&](double t) { return line(t); };
        const double fine = gauss_panel(fn, a, b, 16);
        const double e = std::abs(fine - coarse);
        if (e <= tol || depth >= max_depth) {
            acc += fine;
            err += e;
            return;
        }
        const double m = 0.5 * (a + b);
        const double cl = gauss_panel(fn, a, m, 8);
        const double cr = gauss_panel(fn, m, b, 8);
        panel(a, m, cl, 0.5 * tol, depth + 1, max_depth, acc, err);
        panel(m, b, cr, 0.5 * tol, depth + 1, max_depth, acc, err);
    }
};

}  // namespace

PolarResult polar_integrate(const std::function<double(const Vec2&)>& f, const PolarDomain& dom,
                            double sigma, const PolarOptions& opt) {
    AngularWorker w{&f, &dom, sigma, opt.radial_pts};
    const std::vector<double> br = angular_breaks(dom);
    PolarResult res;
    const int npanel = static_cast<int>(br.size()) - 1;
    for (int i = 0; i < npanel; ++i) {
        const double a = br[i], b = br[i + 1];
        if (!(b > a)) continue;
        auto fn = [&](double t) { return w.line(t); };
        const double coarse = gauss_panel(fn, a, b, 8);
        w.panel(a, b, coarse, opt.abs_tol * (b - a) / (2.0 * kPi), 0, opt.max_depth, res.value,
                res.err_estimate);
    }
    res.converged = res.err_estimate <= 4.0 * opt.abs_tol;
    if (!res.converged && opt.throw_on_budget)
        throw AccuracyError("polar_integrate: accuracy budget exhausted (err ~ " +
                            std::to_string(res.err_estimate) + ")");
    return res;
}

double exterior_integrate(const std::function<double(const Vec2&)>& f, const Vec2& pole, double R,
                          double decay, double abs_tol, int angular_pts) {
    // mean over the circle of radius rho about the pole (trapezoid, periodic)
    auto ring = [&](double rho) {
        double s = 0.0;
        for (int i = 0; i < angular_pts; ++i) {
            const double a = 2.0 * kPi * (i + 0.5) / angular_pts;
            s += f(pole + rho * unit(a));
        }
        return s * (2.0 * kPi / angular_pts) * rho;
    };
    // rho = R/u, d rho = -R/u^2 du; integrand ~ rho^{1-decay} -> u^{decay-3}
    auto sub = [&](double u) { return ring(R / u) * R / (u * u); };
    // decay > 2 keeps the u-integrand integrable at 0; grade panels toward it
    double total = 0.0;
    double hi = 1.0;
    for (int m = 0; m < 40; ++m) {
        const double lo = hi * 0.5;
        const double part = gauss_panel(sub, lo, hi, 16);
        total += part;
        hi = lo;
        if (std::abs(part) < 0.02 * abs_tol && m > 6) break;
    }
    return total;
}

}  // namespace dislab::quad
