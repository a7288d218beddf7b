#include "detail/gl.hpp"
#include "sr/osc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace sr {

Poly2::Poly2(std::vector<Term> terms) {
    std::map<std::pair<int, int>, double> acc;
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < 0) throw std::invalid_argument("Poly2: negative exponent");
        acc[{t.i, t.j}] += t.c;
    }
    for (const auto& [e, c] : acc)
        if (c != 0.0) terms_.push_back({e.first, e.second, c});
}

Poly2 Poly2::from(const PuiseuxPoly& p) {
    if (!p.has_integer_exponents()) throw std::invalid_argument("Poly2: integer exponents required");
    std::vector<Term> t;
    for (const auto& [e, c] : p.terms())
        t.push_back({static_cast<int>(e.e1.to_int()), static_cast<int>(e.e2.to_int()), c.to_double()});
    return Poly2(std::move(t));
}

int Poly2::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max({d, t.i, t.j});
    return d;
}

namespace {
template <class T>
void powers(T x, int d, std::vector<T>& out) {
    out.resize(static_cast<std::size_t>(d) + 1);
    out[0] = T(1);
    for (int k = 1; k <= d; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) - 1] * x;
}
}  // namespace

cplx Poly2::value(cplx x1, cplx x2) const {
    int d = degree();
    std::vector<cplx> p1, p2;
    powers(x1, d, p1);
    powers(x2, d, p2);
    cplx s = 0;
    for (const auto& t : terms_) s += t.c * p1[static_cast<std::size_t>(t.i)] * p2[static_cast<std::size_t>(t.j)];
    return s;
}

double Poly2::value(double x1, double x2) const { return value(cplx(x1), cplx(x2)).real(); }

void Poly2::eval2(cplx x1, cplx x2, cplx& v, std::array<cplx, 2>& g, std::array<cplx, 3>& h) const {
    thread_local std::vector<cplx> p1, p2;
    int d = degree();
    powers(x1, d, p1);
    powers(x2, d, p2);
    v = 0;
    g = {0, 0};
    h = {0, 0, 0};
    auto P = [](const std::vector<cplx>& p, int k) { return k < 0 ? cplx(0) : p[static_cast<std::size_t>(k)]; };
    for (const auto& t : terms_) {
        double i = t.i, j = t.j;
        v += t.c * P(p1, t.i) * P(p2, t.j);
        g[0] += t.c * i * P(p1, t.i - 1) * P(p2, t.j);
        g[1] += t.c * j * P(p1, t.i) * P(p2, t.j - 1);
        h[0] += t.c * i * (i - 1) * P(p1, t.i - 2) * P(p2, t.j);
        h[1] += t.c * i * j * P(p1, t.i - 1) * P(p2, t.j - 1);
        h[2] += t.c * j * (j - 1) * P(p1, t.i) * P(p2, t.j - 2);
    }
}

double Poly2::third_derivative_bound(double r1, double r2) const {
    double s = 0;
    auto pw = [](double r, int k) { return k < 0 ? 0.0 : std::pow(r, k); };
    for (const auto& t : terms_) {
        double i = t.i, j = t.j, c = std::abs(t.c);
        s += c * (i * (i - 1) * (i - 2) * pw(r1, t.i - 3) * pw(r2, t.j) +
                  3 * i * (i - 1) * j * pw(r1, t.i - 2) * pw(r2, t.j - 1) +
                  3 * i * j * (j - 1) * pw(r1, t.i - 1) * pw(r2, t.j - 2) +
                  j * (j - 1) * (j - 2) * pw(r1, t.i) * pw(r2, t.j - 3));
    }
    return s;
}

std::optional<std::pair<std::vector<double>, std::vector<double>>> Poly2::split() const {
    int d = degree();
    std::vector<double> f(static_cast<std::size_t>(d) + 1, 0.0), g(static_cast<std::size_t>(d) + 1, 0.0);
    for (const auto& t : terms_) {
        if (t.i > 0 && t.j > 0) return std::nullopt;
        if (t.j == 0)
            f[static_cast<std::size_t>(t.i)] += t.c;
        else
            g[static_cast<std::size_t>(t.j)] += t.c;
    }
    return std::make_pair(f, g);
}

std::string to_string(Route2d r) {
    switch (r) {
        case Route2d::separable: return "separable";
        case Route2d::deformed: return "deformed";
        case Route2d::direct: return "direct";
        default: return "automatic";
    }
}

namespace {

using Integrand = std::function<cplx(double, double)>;

struct Panel {
    double x0, x1, y0, y1;
    cplx coarse;    // one GL16 x GL16 panel
    cplx fine;      // sum over the four children
    std::array<cplx, 4> child;
    double err;
};

cplx tensor_gl(const Integrand& F, double x0, double x1, double y0, double y1) {
    const auto& gl = detail::gl16();
    double cx = 0.5 * (x0 + x1), rx = 0.5 * (x1 - x0), cy = 0.5 * (y0 + y1), ry = 0.5 * (y1 - y0);
    std::array<cplx, 16> rows;
    for (unsigned a = 0; a < 16; ++a) {
        cplx s = 0;
        double x = cx + rx * gl.x[a];
        for (unsigned b = 0; b < 16; ++b) s += gl.w[b] * F(x, cy + ry * gl.x[b]);
        rows[a] = gl.w[a] * s;
    }
    return detail::pairwise_sum(rows.data(), rows.size()) * rx * ry;
}

struct Cubature {
    cplx value;
    double error;
    std::size_t nodes;
};

// Globally adaptive: split panels whose coarse/fine difference is too large
// until the summed difference is below max(rel_tol |value|, abs_floor).
Cubature adaptive_cubature(const Integrand& F, const Rect& box, int nx, int ny, double rel_tol, double abs_floor,
                           std::size_t budget) {
    std::size_t nodes = 0;
    auto make = [&](double x0, double x1, double y0, double y1, std::optional<cplx> coarse) {
        Panel p{x0, x1, y0, y1, 0, 0, {}, 0};
        double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
        p.coarse = coarse ? *coarse : tensor_gl(F, x0, x1, y0, y1);
        p.child = {tensor_gl(F, x0, xm, y0, ym), tensor_gl(F, xm, x1, y0, ym), tensor_gl(F, x0, xm, ym, y1),
                   tensor_gl(F, xm, x1, ym, y1)};
        nodes += (coarse ? 4 : 5) * 256;
        if (nodes > budget) throw QuadratureFailure("integrate_osc_2d: node budget exceeded");
        p.fine = detail::pairwise_sum(p.child.data(), 4);
        p.err = std::abs(p.fine - p.coarse);
        return p;
    };
    std::vector<Panel> panels;
    double hx = (box.x1 - box.x0) / nx, hy = (box.y1 - box.y0) / ny;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            panels.push_back(
                make(box.x0 + i * hx, box.x0 + (i + 1) * hx, box.y0 + j * hy, box.y0 + (j + 1) * hy, std::nullopt));
    for (;;) {
        std::vector<cplx> vals(panels.size());
        std::vector<double> errs(panels.size());
        for (std::size_t k = 0; k < panels.size(); ++k) {
            vals[k] = panels[k].fine;
            errs[k] = panels[k].err;
        }
        cplx total = detail::pairwise_sum(vals);
        double err = detail::pairwise_sum(errs);
        double target = std::max(rel_tol * std::abs(total), abs_floor);
        if (err <= target) return {total, err, nodes};
        // Split every panel above its equal share of the target.
        double share = target / static_cast<double>(panels.size());
        std::vector<char> split(panels.size(), 0);
        std::size_t batch = 0;
        for (std::size_t k = 0; k < panels.size(); ++k)
            if (errs[k] > share) split[k] = 1, ++batch;
        std::vector<Panel> next;
        next.reserve(panels.size() + 3 * batch);
        for (std::size_t k = 0; k < panels.size(); ++k) {
            const Panel& p = panels[k];
            if (!split[k]) {
                next.push_back(p);
                continue;
            }
            double xm = 0.5 * (p.x0 + p.x1), ym = 0.5 * (p.y0 + p.y1);
            next.push_back(make(p.x0, xm, p.y0, ym, p.child[0]));
            next.push_back(make(xm, p.x1, p.y0, ym, p.child[1]));
            next.push_back(make(p.x0, xm, ym, p.y1, p.child[2]));
            next.push_back(make(xm, p.x1, ym, p.y1, p.child[3]));
        }
        panels = std::move(next);
    }
}

Rect amplitude_box(const CutoffSpec& a1, const CutoffSpec& a2, double box_sigmas) {
    auto rng = [&](const CutoffSpec& a) {
        if (a.kind == CutoffKind::gaussian) return std::make_pair(a.center - box_sigmas * a.radius, a.center + box_sigmas * a.radius);
        return a.support();
    };
    auto [x0, x1] = rng(a1);
    auto [y0, y1] = rng(a2);
    return {x0, x1, y0, y1};
}

double abs_amplitude_integral(const CutoffSpec& a) {
    QuadConfig c;
    c.self_check = false;
    return integrate_osc_1d(Phase1d{[](double) { return 0.0; }, [](double) { return 0.0; }, "0"}, a, 0, c)
        .abs_integral;
}

QuadResult2d separable_route(const Poly2& phase, const CutoffSpec& a1, const CutoffSpec& a2, double lambda,
                             const Quad2dConfig& cfg) {
    auto sp = phase.split();
    if (!sp) throw std::invalid_argument("integrate_osc_2d: phase has mixed terms, not separable");
    QuadResult r1 = integrate_osc_1d(poly_phase_1d(sp->first), a1, lambda, cfg.base);
    QuadResult r2 = integrate_osc_1d(poly_phase_1d(sp->second), a2, lambda, cfg.base);
    QuadResult2d out;
    out.route = Route2d::separable;
    out.value = r1.value * r2.value;
    out.error = r1.error * std::abs(r2.value) + r2.error * std::abs(r1.value) + r1.error * r2.error;
    out.abs_integral = r1.abs_integral * r2.abs_integral;
    out.nodes = r1.nodes + r2.nodes;
    return out;
}

QuadResult2d direct_route(const Poly2& phase, const CutoffSpec& a1, const CutoffSpec& a2, double lambda,
                          const Quad2dConfig& cfg) {
    Rect box = amplitude_box(a1, a2, cfg.box_sigmas);
    // Panel counts from the largest local frequency and the amplitude scale.
    double gmax1 = 0, gmax2 = 0;
    for (int i = 0; i <= 32; ++i)
        for (int j = 0; j <= 32; ++j) {
            cplx v;
            std::array<cplx, 2> g;
            std::array<cplx, 3> h;
            double x1 = box.x0 + (box.x1 - box.x0) * i / 32.0, x2 = box.y0 + (box.y1 - box.y0) * j / 32.0;
            // far gaussian tails are left to the adaptive refinement
            if (std::abs(a1.profile(x1) * a2.profile(x2)) < 1e-6) continue;
            phase.eval2(x1, x2, v, g, h);
            gmax1 = std::max(gmax1, std::abs(g[0]));
            gmax2 = std::max(gmax2, std::abs(g[1]));
        }
    double cyc = 16.0 / cfg.base.nodes_per_wavelength;
    auto count = [&](double w, double gmax, const CutoffSpec& a) {
        double byfreq = w * lambda * gmax * 1.25 / (2 * std::numbers::pi) / cyc;
        double byamp = std::isfinite(a.variation_scale()) ? w / (a.variation_scale() / 4) : 1;
        return static_cast<int>(std::ceil(std::max({static_cast<double>(cfg.initial_panels) / 4, byfreq, byamp})));
    };
    int nx = count(box.x1 - box.x0, gmax1, a1), ny = count(box.y1 - box.y0, gmax2, a2);
    if (static_cast<double>(nx) * ny * 1280 > static_cast<double>(cfg.base.max_nodes))
        throw QuadratureFailure("integrate_osc_2d: direct route needs " + std::to_string(nx) + "x" +
                                std::to_string(ny) + " panels, over the node budget");
    Integrand F = [&](double x1, double x2) {
        double a = a1(x1) * a2(x2);
        if (a == 0.0) return cplx(0);
        return a * std::polar(1.0, lambda * phase.value(x1, x2));
    };
    double absint = abs_amplitude_integral(a1) * abs_amplitude_integral(a2);
    Cubature c = adaptive_cubature(F, box, nx, ny, cfg.base.rel_tol, 1e-14 * absint, cfg.base.max_nodes);
    QuadResult2d out;
    out.route = Route2d::direct;
    out.value = c.value;
    out.error = c.error;
    out.abs_integral = absint;
    out.nodes = c.nodes;
    return out;
}

QuadResult2d deformed_route(const Poly2& phase, const CutoffSpec& a1, const CutoffSpec& a2, double lambda,
                            const Quad2dConfig& cfg) {
    if (!a1.analytic() || !a2.analytic())
        throw std::invalid_argument("integrate_osc_2d: the deformed route needs gaussian amplitudes");
    Rect box = amplitude_box(a1, a2, cfg.box_sigmas);
    double eta = std::min({cfg.eta, a1.radius, a2.radius});
    double r1 = std::max(std::abs(box.x0), std::abs(box.x1)), r2 = std::max(std::abs(box.y0), std::abs(box.y1));
    double G = std::max(cfg.G, eta * eta * phase.third_derivative_bound(r1 + eta, r2 + eta) / 3);
    double theta = eta / G;
    double worst = 0;  // most negative lambda * Im phi on the contour
    Integrand F = [&](double x1, double x2) {
        cplx v;
        std::array<cplx, 2> g;
        std::array<cplx, 3> h;
        phase.eval2(x1, x2, v, g, h);
        double g1 = g[0].real(), g2 = g[1].real();
        double gn2 = g1 * g1 + g2 * g2;
        double w = 1 / std::sqrt(1 + gn2 / (G * G));
        cplx z1(x1, theta * w * g1), z2(x2, theta * w * g2);
        cplx phz = phase.value(z1, z2);
        double im = lambda * phz.imag();
        if (im < worst) worst = im;
        // d(w grad phi) = w (I - (w^2/G^2) g g^T) H
        double k = w * w / (G * G);
        double P11 = 1 - k * g1 * g1, P12 = -k * g1 * g2, P22 = 1 - k * g2 * g2;
        double H11 = h[0].real(), H12 = h[1].real(), H22 = h[2].real();
        double D11 = w * (P11 * H11 + P12 * H12), D12 = w * (P11 * H12 + P12 * H22);
        double D21 = w * (P12 * H11 + P22 * H12), D22 = w * (P12 * H12 + P22 * H22);
        cplx i_theta(0, theta);
        cplx det = (1.0 + i_theta * D11) * (1.0 + i_theta * D22) - (i_theta * D12) * (i_theta * D21);
        return std::exp(cplx(0, lambda) * phz) * a1(z1) * a2(z2) * det;
    };
    double absint = abs_amplitude_integral(a1) * abs_amplitude_integral(a2);
    Cubature c = adaptive_cubature(F, box, cfg.initial_panels, cfg.initial_panels, cfg.base.rel_tol, 1e-14 * absint,
                                   cfg.base.max_nodes);
    if (worst < -1)
        throw QuadratureFailure("integrate_osc_2d: contour gains growth (lambda Im phi = " + std::to_string(worst) +
                                "), reduce eta");
    QuadResult2d out;
    out.route = Route2d::deformed;
    out.value = c.value;
    out.error = c.error;
    out.abs_integral = absint;
    out.nodes = c.nodes;
    return out;
}

}  // namespace

QuadResult2d integrate_osc_2d(const Poly2& phase, const CutoffSpec& a1, const CutoffSpec& a2, double lambda,
                              const Quad2dConfig& cfg) {
    a1.validate();
    a2.validate();
    if (!std::isfinite(lambda)) throw std::invalid_argument("integrate_osc_2d: lambda must be finite");
    if (lambda < 0) {
        QuadResult2d r = integrate_osc_2d(phase, a1, a2, -lambda, cfg);
        r.value = std::conj(r.value);
        return r;
    }
    Route2d route = cfg.route;
    if (route == Route2d::automatic) {
        if (phase.split())
            route = Route2d::separable;
        else if (a1.analytic() && a2.analytic() && lambda > 0)
            route = Route2d::deformed;
        else
            route = Route2d::direct;
    }
    switch (route) {
        case Route2d::separable: return separable_route(phase, a1, a2, lambda, cfg);
        case Route2d::deformed: return deformed_route(phase, a1, a2, lambda, cfg);
        default: return direct_route(phase, a1, a2, lambda, cfg);
    }
}

}  // namespace sr
