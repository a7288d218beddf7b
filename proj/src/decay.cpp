#include "sr/osc.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace sr {

std::vector<double> dyadic_grid(int kmin, int kmax, int step) {
    if (step < 1 || kmin > kmax) throw std::invalid_argument("dyadic_grid: need kmin <= kmax, step >= 1");
    std::vector<double> g;
    for (int k = kmin; k <= kmax; k += step) g.push_back(std::ldexp(1.0, k));
    return g;
}

DecayFit fit_decay(std::vector<DecayPoint> pts) {
    if (pts.size() < 6) throw std::invalid_argument("fit_decay: at least 6 lambda values required");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i].lambda > pts[i - 1].lambda)) throw std::invalid_argument("fit_decay: lambda grid not increasing");
    std::vector<double> x, y;
    for (const auto& p : pts) {
        if (!(p.lambda > 0) || std::abs(p.value) == 0.0)
            throw std::invalid_argument("fit_decay: need lambda > 0 and nonzero values");
        x.push_back(std::log2(p.lambda));
        y.push_back(std::log2(std::abs(p.value)));
    }
    double n = static_cast<double>(x.size()), mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i] / n, my += y[i] / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    DecayFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    for (std::size_t i = 0; i < x.size(); ++i)
        f.max_residual = std::max(f.max_residual, std::abs(y[i] - f.intercept - f.slope * x[i]));
    f.lambda_range = {pts.front().lambda, pts.back().lambda};
    f.points = std::move(pts);
    return f;
}

DecayFit decay_fit(const OscIntegralSpec& spec, const Quad2dConfig& cfg) {
    std::vector<DecayPoint> pts;
    std::optional<Poly2> ph2;
    if (!spec.phase.is_1d()) ph2 = spec.phase.phase_2d();
    for (double lam : spec.lambda_grid) {
        cplx v = spec.phase.is_1d() ? integrate_osc_1d(spec.phase.phase_1d(lam), spec.a1, lam, cfg.base).value
                                    : integrate_osc_2d(*ph2, spec.a1, spec.a2, lam, cfg).value;
        pts.push_back({lam, v});
    }
    return fit_decay(std::move(pts));
}

std::string decay_csv(const DecayFit& fit) {
    std::ostringstream os;
    os << std::setprecision(17) << "lambda,re,im,abs,log2_abs\n";
    for (const auto& p : fit.points)
        os << p.lambda << ',' << p.value.real() << ',' << p.value.imag() << ',' << std::abs(p.value) << ','
           << std::log2(std::abs(p.value)) << '\n';
    return os.str();
}

}  // namespace sr
