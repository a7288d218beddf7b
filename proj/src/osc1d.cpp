#include "detail/gl.hpp"
#include "sr/osc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sr {

Phase1d monomial_phase(int B, double coeff) {
    if (B < 1) throw std::invalid_argument("monomial_phase: B >= 1 required");
    return {[B, coeff](double t) { return coeff * std::pow(t, B); },
            [B, coeff](double t) { return coeff * B * std::pow(t, B - 1); }, "x^" + std::to_string(B)};
}

Phase1d airy_phase(double B1, double B3) {
    return {[B1, B3](double t) { return B3 * t * t * t - B1 * t; },
            [B1, B3](double t) { return 3 * B3 * t * t - B1; }, "airy"};
}

Phase1d poly_phase_1d(std::vector<double> c) {
    auto f = [c](double t) {
        double s = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * t + *it;
        return s;
    };
    auto df = [c](double t) {
        double s = 0;
        for (std::size_t k = c.size(); k-- > 1;) s = s * t + static_cast<double>(k) * c[k];
        return s;
    };
    return {f, df, "poly"};
}

namespace {

// Points where the amplitude changes character; panels never straddle them.
std::vector<double> amplitude_breaks(const CutoffSpec& a) {
    auto [lo, hi] = a.support();
    std::vector<double> b{lo, hi};
    double c = a.center, r = a.radius;
    switch (a.kind) {
        case CutoffKind::bump:
            b.insert(b.end(), {c - r / 2, c + r / 2});
            break;
        case CutoffKind::annulus:
            b.insert(b.end(), {c - r / 2, c - 1, c - 0.5, c + 0.5, c + 1, c + r / 2});
            break;
        case CutoffKind::gaussian:
            b.push_back(c);
            break;
        case CutoffKind::indicator:
            break;
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    std::vector<double> out;
    for (double x : b)
        if (x >= lo && x <= hi) out.push_back(x);
    return out;
}

struct Pass {
    cplx value;
    std::size_t nodes;
};

// refine = 2 halves every panel of the refine = 1 pass.
Pass run_pass(const Phase1d& ph, const CutoffSpec& amp, double lambda, double npw, double refine, std::size_t budget,
              bool absolute) {
    const auto& gl = detail::gl16();
    const double max_cycles = 16.0 / (npw * refine);  // wavelengths per 16-node panel
    double hmax = std::min(amp.variation_scale() / 8, amp.support().second - amp.support().first) / refine;
    std::vector<double> br = amplitude_breaks(amp);
    std::vector<cplx> parts;
    std::size_t nodes = 0;
    std::vector<std::pair<double, double>> stack;
    for (std::size_t i = br.size(); i-- > 1;) stack.emplace_back(br[i - 1], br[i]);
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        double h = b - a;
        if (h <= 0) continue;
        bool split = h > hmax * (1 + 1e-12);
        if (!split && lambda > 0 && !absolute) {
            double md = 0;
            for (int k = 0; k <= 16; ++k) md = std::max(md, std::abs(ph.df(a + h * k / 16.0)));
            split = h * lambda * md * 1.25 / (2 * std::numbers::pi) > max_cycles;
        }
        if (split) {
            if (h < 1e-13 * (1 + std::abs(a))) throw QuadratureFailure("integrate_osc_1d: panel width underflow");
            double m = 0.5 * (a + b);
            stack.emplace_back(m, b);
            stack.emplace_back(a, m);
            continue;
        }
        nodes += 16;
        if (nodes > budget) throw QuadratureFailure("integrate_osc_1d: node budget exceeded");
        cplx s = 0;
        double c = 0.5 * (a + b), r = 0.5 * h;
        for (unsigned k = 0; k < 16; ++k) {
            double t = c + r * gl.x[k];
            double av = amp(t);
            if (absolute)
                s += gl.w[k] * std::abs(av);
            else if (av != 0.0)
                s += gl.w[k] * av * std::polar(1.0, lambda * ph.f(t));
        }
        parts.push_back(s * r);
    }
    return {detail::pairwise_sum(parts), nodes};
}

}  // namespace

QuadResult integrate_osc_1d(const Phase1d& phase, const CutoffSpec& amp, double lambda, const QuadConfig& cfg) {
    amp.validate();
    if (!std::isfinite(lambda)) throw std::invalid_argument("integrate_osc_1d: lambda must be finite");
    if (lambda < 0) {
        QuadResult r = integrate_osc_1d(phase, amp, -lambda, cfg);
        r.value = std::conj(r.value);
        return r;
    }
    if (cfg.nodes_per_wavelength < 10) throw std::invalid_argument("integrate_osc_1d: >= 10 nodes per wavelength");
    QuadResult out;
    Pass ab = run_pass(phase, amp, 0, cfg.nodes_per_wavelength, 1, cfg.max_nodes, true);
    out.abs_integral = ab.value.real();
    Pass p1 = run_pass(phase, amp, lambda, cfg.nodes_per_wavelength, 1, cfg.max_nodes, false);
    out.value = p1.value;
    out.nodes = ab.nodes + p1.nodes;
    if (cfg.self_check) {
        Pass p2 = run_pass(phase, amp, lambda, cfg.nodes_per_wavelength, 2, cfg.max_nodes, false);
        out.error = std::abs(p2.value - p1.value);
        out.value = p2.value;
        out.nodes += p2.nodes;
        double scale = std::max(std::abs(p2.value), 1e-10 * out.abs_integral);
        if (out.error > 10 * cfg.rel_tol * scale)
            throw QuadratureFailure("integrate_osc_1d: resolution check failed (difference " +
                                    std::to_string(out.error) + ")");
    }
    return out;
}

}  // namespace sr
