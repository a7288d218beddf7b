#include "sr/cutoff.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sr {

std::string to_string(CutoffKind k) {
    switch (k) {
        case CutoffKind::bump: return "bump";
        case CutoffKind::annulus: return "annulus";
        case CutoffKind::indicator: return "indicator";
        case CutoffKind::gaussian: return "gaussian";
    }
    return "?";
}

CutoffKind cutoff_kind_from_string(const std::string& s) {
    if (s == "bump") return CutoffKind::bump;
    if (s == "annulus") return CutoffKind::annulus;
    if (s == "indicator") return CutoffKind::indicator;
    if (s == "gaussian") return CutoffKind::gaussian;
    throw std::invalid_argument("unknown cutoff kind '" + s + "'");
}

double smooth_step(double u) {
    if (u <= 0) return 1.0;
    if (u >= 1) return 0.0;
    double a = std::exp(-1.0 / (1.0 - u));
    double b = std::exp(-1.0 / u);
    return a / (a + b);
}

void CutoffSpec::validate() const {
    if (!(radius > 0) || !std::isfinite(radius) || !std::isfinite(center))
        throw std::invalid_argument("cutoff radius must be positive and finite");
    if (!std::isfinite(height)) throw std::invalid_argument("cutoff height must be finite");
    if (kind == CutoffKind::annulus && radius < 2)
        throw std::invalid_argument("annulus needs outer radius >= 2");
}

namespace {
double plateau(double dist, double r) { return smooth_step(2.0 * dist / r - 1.0); }
}  // namespace

double CutoffSpec::operator()(double t) const { return height * profile(t); }

double CutoffSpec::profile(double t) const {
    double d = std::abs(t - center);
    switch (kind) {
        case CutoffKind::bump: return plateau(d, radius);
        case CutoffKind::annulus: return plateau(d, radius) - plateau(d, 1.0);
        case CutoffKind::indicator: return d <= radius ? 1.0 : 0.0;
        case CutoffKind::gaussian: return std::exp(-0.5 * (d / radius) * (d / radius));
    }
    return 0.0;
}

std::complex<double> CutoffSpec::operator()(std::complex<double> z) const {
    if (kind != CutoffKind::gaussian) throw std::logic_error("complex evaluation needs an analytic cutoff");
    std::complex<double> u = (z - center) / radius;
    return height * std::exp(-0.5 * u * u);
}

std::pair<double, double> CutoffSpec::support() const {
    switch (kind) {
        case CutoffKind::bump:
        case CutoffKind::annulus:
        case CutoffKind::indicator: return {center - radius, center + radius};
        case CutoffKind::gaussian: return {center - 9.0 * radius, center + 9.0 * radius};
    }
    return {0, 0};
}

double CutoffSpec::variation_scale() const {
    switch (kind) {
        case CutoffKind::bump: return radius / 2;
        case CutoffKind::annulus: return 0.5;
        case CutoffKind::indicator: return std::numeric_limits<double>::infinity();
        case CutoffKind::gaussian: return radius;
    }
    return radius;
}

}  // namespace sr
