#include "sr/osc.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <queue>

namespace sr {

namespace {

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk31(const std::function<double(double)>& f, double a, double b) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double h = 0.5 * (b - a), m = 0.5 * (a + b), e = 0;
    // max_depth 0: one Kronrod rule on [-1,1]; the error is not rescaled by boost.
    double v = GK::integrate([&](double t) { return f(m + h * t); }, -1.0, 1.0, 0, 0.0, &e);
    return {a, b, h * v, h * e};
}

}  // namespace

double integrate_abs_1d(const std::function<double(double)>& f, double a, double b, std::vector<double> breaks,
                        double tol, double* error) {
    if (!(a < b)) throw std::invalid_argument("integrate_abs_1d: a < b required");
    if (!(tol > 0)) throw std::invalid_argument("integrate_abs_1d: tol > 0 required");
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::priority_queue<Segment> heap;
    double total = 0, err = 0;
    double prev = a;
    for (double x : breaks) {
        if (x <= prev || x > b) continue;
        Segment s = gk31(f, prev, x);
        total += s.value;
        err += s.err;
        heap.push(s);
        prev = x;
    }
    std::size_t evals = heap.size();
    while (err > tol * std::abs(total) && err > 1e-300) {
        if (++evals > 100000) throw QuadratureFailure("integrate_abs_1d: segment budget exceeded");
        Segment s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        if (!(m > s.a && m < s.b)) throw QuadratureFailure("integrate_abs_1d: segment width underflow");
        Segment l = gk31(f, s.a, m), r = gk31(f, m, s.b);
        total += l.value + r.value - s.value;
        err += l.err + r.err - s.err;
        heap.push(l);
        heap.push(r);
    }
    // Recompute from the final segments so the running updates leave no drift.
    total = err = 0;
    std::vector<double> vals;
    while (!heap.empty()) {
        vals.push_back(heap.top().value);
        err += heap.top().err;
        heap.pop();
    }
    std::sort(vals.begin(), vals.end());
    for (double v : vals) total += v;
    if (error) *error = err;
    return total;
}

std::vector<double> graded_breaks(double center, double scale, double lo, double hi) {
    std::vector<double> out;
    if (!(scale > 0)) return out;
    if (center > lo && center < hi) out.push_back(center);
    for (int j = 0; j < 80; ++j) {
        double d = std::ldexp(scale, j);
        bool any = false;
        for (double x : {center - d, center + d})
            if (x > lo && x < hi) out.push_back(x), any = true;
        if (!any && (center - d <= lo && center + d >= hi)) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

double integrate_abs_2d(const AbsIntegrand2d& g, const Rect& dom, double tol) {
    auto inner = [&](double y2) {
        std::vector<double> br = g.inner_breaks ? g.inner_breaks(y2) : std::vector<double>{};
        return integrate_abs_1d([&](double y1) { return g.f(y1, y2); }, dom.x0, dom.x1, br, tol / 4);
    };
    return integrate_abs_1d(inner, dom.y0, dom.y1, g.outer_breaks, tol);
}

double power_tail_radius(double N, double tol) {
    if (!(N > 1) || !(tol > 0)) throw std::invalid_argument("power_tail_radius: N > 1, tol > 0 required");
    return std::max(0.0, std::pow(2 / ((N - 1) * tol), 1 / (N - 1)) - 1);
}

std::vector<double> real_poly_roots(const std::vector<double>& ascending) {
    std::vector<double> c = ascending;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = c[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(v);
    auto p = [&](double x, double& dp) {
        double s = 0;
        dp = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            dp = dp * x + s;
            s = s * x + c[k];
        }
        return s;
    };
    std::vector<double> out;
    for (const auto& z : solver.roots()) {
        if (std::abs(z.imag()) > 1e-7 * (1 + std::abs(z))) continue;
        double x = z.real();
        for (int it = 0; it < 4; ++it) {
            double dp, px = p(x, dp);
            if (dp == 0.0) break;
            double nx = x - px / dp;
            if (!std::isfinite(nx)) break;
            x = nx;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1 + std::abs(a)); }),
              out.end());
    return out;
}

}  // namespace sr
