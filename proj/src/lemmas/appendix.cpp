#include "detail/parallel.hpp"
#include "sr/lemmas.hpp"

#include <algorithm>
#include <cmath>

namespace sr {

namespace {

double ipow_inv(double x, int N) {  // x^{-N}, x >= 1
    double r = 1;
    for (int k = 0; k < N; ++k) r *= x;
    return 1 / r;
}

double horner(const std::vector<double>& c, double x) {
    double s = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
    return s;
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    return d;
}

// Breakpoints resolving the peaks of g(p(y)) for a rapidly decaying g:
// graded around the real roots of p and of p' inside (lo,hi).
std::vector<double> peak_breaks(const std::vector<double>& p, double lo, double hi) {
    auto d1 = derivative(p), d2 = derivative(d1), d3 = derivative(d2);
    auto width = [&](double x) {
        double s = std::max({std::abs(horner(d1, x)), std::sqrt(std::abs(horner(d2, x)) / 2),
                             std::cbrt(std::abs(horner(d3, x)) / 6)});
        return s > 0 ? 1 / s : hi - lo;
    };
    std::vector<double> out;
    auto centers = real_poly_roots(p);
    auto crit = real_poly_roots(d1);
    centers.insert(centers.end(), crit.begin(), crit.end());
    for (double c : centers) {
        if (c <= lo || c >= hi) continue;
        auto g = graded_breaks(c, width(c), lo, hi);
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

GridPoint failed_point(Params params, int level, const std::exception& e) {
    GridPoint g;
    g.params = std::move(params);
    g.level = level;
    g.status = PointStatus::failed;
    g.note = e.what();
    return g;
}

}  // namespace

std::string to_string(As1Model m) { return m == As1Model::degenerate ? "degenerate" : "perturbed"; }
std::string to_string(As2Model m) { return m == As2Model::constant ? "constant" : "perturbed"; }

double as1_integral(const As1Point& p, As1Model model, int N, double tol) {
    if (N < 2) throw std::invalid_argument("as1_integral: N >= 2 required");
    const bool pert = model == As1Model::perturbed;
    const double T = p.T;
    // A - (B + Q(y2/T)) y2 - b(y2/T) y2^3 as a polynomial in y2
    std::vector<double> C = pert ? std::vector<double>{p.A, -p.B, -0.5 / T, -1, -0.1 / T}
                                 : std::vector<double>{p.A, -p.B, 0, -1};
    auto slope = [&](double y2) { return pert ? 0.5 + 0.25 * y2 / T : 0.0; };
    const double R = power_tail_radius(N, tol * 1e-3);
    AbsIntegrand2d g;
    g.f = [&](double y1, double y2) {
        double arg = horner(C, y2) + slope(y2) * y1;
        double w = p.eps == 0 ? 1.0 : std::pow(std::abs(y2), p.eps);
        return ipow_inv(1 + std::abs(arg), N) * ipow_inv(1 + std::abs(y1), N) * w;
    };
    g.inner_breaks = [&](double y2) {
        std::vector<double> b = graded_breaks(0, 1, -R, R);
        double s = slope(y2);
        if (s != 0) {
            auto r = graded_breaks(-horner(C, y2) / s, 1 / s, -R, R);
            b.insert(b.end(), r.begin(), r.end());
        }
        return b;
    };
    g.outer_breaks = peak_breaks(C, -T, T);
    g.outer_breaks.push_back(0);
    return integrate_abs_2d(g, {-R, R, -T, T}, tol);
}

std::vector<As1Point> as1_default_points(const As1Options& o) {
    std::vector<As1Point> pts;
    for (int k : o.T_exps) {
        double T = std::ldexp(1.0, k);
        std::vector<std::pair<double, double>> ab{
            {T * T * T, 0},          {-T * T * T, 0},     {T * T * T / 8, 0},  {0, T * T},
            {0, -T * T},             {0, T * T / 4},      {T * T * T / 2, T * T / 2},
            {16, 0},                 {0, 16}};
        // A - B y - y^3 = -(y - r)^2 (y + 2r): a double root, the sharp case
        for (double r : {T / 2, T / 4}) {
            ab.push_back({-2 * r * r * r, -3 * r * r});
            ab.push_back({2 * r * r * r, -3 * r * r});
        }
        for (double eps : o.eps)
            for (auto [A, B] : ab) pts.push_back({A, B, T, eps});
    }
    return pts;
}

BoundCheck check_as1(const As1Options& o) {
    BoundCheck c;
    c.lemma_id = "as1";
    c.block_levels = o.block_levels;
    std::vector<As1Point> pts = o.points.empty() ? as1_default_points(o) : o.points;
    struct Task {
        As1Point p;
        As1Model m;
    };
    std::vector<Task> tasks;
    for (const auto& p : pts)
        for (As1Model m : o.models) tasks.push_back({p, m});
    const double L = o.common.L;
    c.grid = detail::parallel_map<GridPoint>(
        tasks.size(),
        [&](std::size_t i) {
            const auto& [p, m] = tasks[i];
            GridPoint g;
            g.params = {{"A", p.A}, {"B", p.B}, {"T", p.T}, {"eps", p.eps}, {"model", m == As1Model::perturbed}};
            g.level = static_cast<int>(std::lround(std::log2(p.T)));
            if (std::max(std::abs(p.A), std::abs(p.B)) < L || p.T < L) {
                g.status = PointStatus::skipped;
                g.note = "needs max(|A|,|B|) >= L and T >= L";
                return g;
            }
            if (std::abs(p.A) > p.T * p.T * p.T || std::abs(p.B) > p.T * p.T) {
                g.status = PointStatus::skipped;
                g.note = "needs |A| <= T^3 and |B| <= T^2";
                return g;
            }
            try {
                g.quantity = as1_integral(p, m, o.N, o.common.tol);
            } catch (const std::exception& e) {
                return failed_point(g.params, g.level, e);
            }
            g.bound = std::pow(std::max(std::cbrt(std::abs(p.A)), std::sqrt(std::abs(p.B))), p.eps - 0.5);
            g.ratio = g.quantity / g.bound;
            return g;
        },
        o.common.threads);
    c.notes.push_back("model key: 0 degenerate (b = 1, Q = r = 0), 1 perturbed (b = 1 + u/10, Q = u/2, r1 = y1/2, r2 = y1/4)");
    c.notes.push_back("N = " + std::to_string(o.N) + "; y1 truncated where the (1+|y1|)^-N tail is below tol/1000");
    finalize(c);
    return c;
}

double as2_integral(const As2Point& p, As2Model model, double tol) {
    const double T = p.T;
    // A + B y + b(delta y) y^3
    std::vector<double> P = model == As2Model::perturbed ? std::vector<double>{p.A, p.B, 0, 1, 0.5 * p.delta}
                                                         : std::vector<double>{p.A, p.B, 0, 1};
    CutoffSpec chi = CutoffSpec::bump(0, 1);
    auto f = [&](double y) {
        double v = horner(P, y);
        return std::exp(-0.5 * v * v) * chi(y / T);
    };
    std::vector<double> br = peak_breaks(P, -T, T);
    br.insert(br.end(), {-T / 2, 0, T / 2});
    return integrate_abs_1d(f, -T, T, br, tol);
}

std::vector<As2Point> as2_default_points(const As2Options& o) {
    std::vector<As2Point> pts;
    const double d0 = o.common.delta0;
    for (int k : o.T_exps) {
        double T = std::ldexp(1.0, k), T2 = T * T, T3 = T2 * T;
        std::vector<std::pair<double, double>> ab{
            {0, 0},         {T3, 0},        {-T3 / 8, 0},   {0, T2},         {0, -T2},
            {16, 0},        {0, 16},        {-2 * T3 / 8, -3 * T2 / 4},  // double root at y = -T/2
            {0, 4 * T2 / (d0 * d0)}, {0, -4 * T2 / (d0 * d0)},           // |B| > T^2/delta0^2
            {2 * T3 / (d0 * d0 * d0), 0}};                              // |A| > T^3/delta0^3
        for (auto [A, B] : ab) pts.push_back({A, B, T, d0 / T});
    }
    return pts;
}

BoundCheck check_as2(const As2Options& o) {
    BoundCheck c;
    c.lemma_id = "as2";
    c.block_levels = o.block_levels;
    std::vector<As2Point> pts = o.points.empty() ? as2_default_points(o) : o.points;
    struct Task {
        As2Point p;
        As2Model m;
    };
    std::vector<Task> tasks;
    for (const auto& p : pts)
        for (As2Model m : o.models) tasks.push_back({p, m});
    c.grid = detail::parallel_map<GridPoint>(
        tasks.size(),
        [&](std::size_t i) {
            const auto& [p, m] = tasks[i];
            GridPoint g;
            g.params = {{"A", p.A}, {"B", p.B}, {"T", p.T}, {"delta", p.delta}, {"model", m == As2Model::perturbed}};
            g.level = static_cast<int>(std::lround(std::log2(p.T)));
            if (p.T < o.common.L || !(p.delta > 0) || p.delta >= 1 || p.delta * p.T > o.common.delta0 * (1 + 1e-12)) {
                g.status = PointStatus::skipped;
                g.note = "needs T >= L, 0 < delta < 1, delta T <= delta0";
                return g;
            }
            try {
                g.quantity = as2_integral(p, m, o.common.tol);
            } catch (const std::exception& e) {
                return failed_point(g.params, g.level, e);
            }
            g.bound = 1 / std::sqrt(1 + std::max(std::cbrt(std::abs(p.A)), std::sqrt(std::abs(p.B))));
            g.ratio = g.quantity / g.bound;
            return g;
        },
        o.common.threads);
    c.notes.push_back("rho(x) = exp(-x^2/2); chi0 = bump of radius 1; model key: 0 b = 1, 1 b(u) = 1 + u/2");
    finalize(c);
    return c;
}

double simple_int_value(const SimpleIntPoint& p, double tol) {
    if (!(p.eps > 0)) throw std::invalid_argument("simple_int: eps > 0 required");
    CutoffSpec chi = CutoffSpec::bump(0, 1);
    auto f = [&](double v) {
        return std::pow(1 + std::max(std::abs(p.A + p.B * v), std::abs(p.D + p.E * v)), -p.eps) * chi(v);
    };
    std::vector<double> br{-0.5, 0, 0.5};
    auto add_zero = [&](double a, double b) {
        if (b == 0) return;
        auto g = graded_breaks(-a / b, 1 / std::abs(b), -1, 1);
        br.insert(br.end(), g.begin(), g.end());
    };
    add_zero(p.A, p.B);
    add_zero(p.D, p.E);
    // kinks of the max
    for (double s : {1.0, -1.0}) {
        double den = p.B - s * p.E;
        if (den != 0) {
            double v = (s * p.D - p.A) / den;
            if (v > -1 && v < 1) br.push_back(v);
        }
    }
    return integrate_abs_1d(f, -1, 1, br, tol);
}

std::vector<SimpleIntPoint> simple_int_default_directions() {
    return {
        {1, 0, 0, 0, 0},     // B = E = 0, |A| large
        {0, 1, 0, 0, 0},     // |B| >> |A|
        {0.01, 1, 0, 0, 0},
        {0, 0, 0, 1, 0},
        {1, 1, -1, 1, 0},
        {0.3, -1, 0.15, -0.5, 0},  // A + Bv and D + Ev both vanish at v = 0.3
        {0.2, 1, 0.7, -1, 0},
        {-0.5, 2, 0.25, 0.5, 0},
    };
}

BoundCheck check_simple_int(const SimpleIntOptions& o) {
    BoundCheck c;
    c.lemma_id = "simple_int";
    c.block_levels = o.block_levels;
    auto dirs = o.directions.empty() ? simple_int_default_directions() : o.directions;
    struct Task {
        SimpleIntPoint p;
        int level;
    };
    std::vector<Task> tasks;
    for (double eps : o.eps)
        for (int k = o.level_min; k <= o.level_max; ++k)
            for (const auto& d : dirs) {
                double s = std::ldexp(1.0, k);
                tasks.push_back({{d.A * s, d.B * s, d.D * s, d.E * s, eps}, k});
            }
    c.grid = detail::parallel_map<GridPoint>(
        tasks.size(),
        [&](std::size_t i) {
            const auto& [p, level] = tasks[i];
            GridPoint g;
            g.params = {{"A", p.A}, {"B", p.B}, {"D", p.D}, {"E", p.E}, {"eps", p.eps}};
            g.level = level;
            if (!(p.eps > 0) || p.eps > 1) {
                g.status = PointStatus::skipped;
                g.note = "needs 0 < eps <= 1";
                return g;
            }
            try {
                g.quantity = simple_int_value(p, o.common.tol);
            } catch (const std::exception& e) {
                return failed_point(g.params, g.level, e);
            }
            double m = std::max({1.0, std::abs(p.A), std::abs(p.B), std::abs(p.D), std::abs(p.E)});
            g.bound = std::pow(m, -p.eps);
            g.ratio = g.quantity / g.bound;
            return g;
        },
        o.common.threads);
    c.notes.push_back("chi0 = bump of radius 1; bound max{1,|A|,|B|,|D|,|E|}^-eps (the trivial bound below 1)");
    finalize(c);
    return c;
}

}  // namespace sr
