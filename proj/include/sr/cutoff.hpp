#pragma once
// Smooth cut-off functions in one variable; 2-D amplitudes are products of two.
//
// bump      : 1 on |t-c| <= r/2, 0 on |t-c| >= r, C-infinity in between
// annulus   : bump_r(|t-c|) - bump_1(|t-c|), supported in 1/2 <= |t-c| <= r (r >= 2)
// indicator : 1 on |t-c| <= r
// gaussian  : exp(-(t-c)^2 / (2 r^2)); entire, so complex contour shifts are allowed
//
// The transition is the smooth step f(1-u)/(f(1-u)+f(u)), f(u) = exp(-1/u).

#include <complex>
#include <string>
#include <utility>

namespace sr {

enum class CutoffKind { bump, annulus, indicator, gaussian };

std::string to_string(CutoffKind k);
CutoffKind cutoff_kind_from_string(const std::string& s);

double smooth_step(double u);  // 1 for u <= 0, 0 for u >= 1

struct CutoffSpec {
    CutoffKind kind = CutoffKind::bump;
    double center = 0.0;
    double radius = 1.0;
    std::string smoothness = "exp-inverse-step";
    double height = 1.0;  // multiplies the profile; 0 gives the zero amplitude

    static CutoffSpec bump(double center, double radius) { return {CutoffKind::bump, center, radius}; }
    static CutoffSpec annulus(double outer) { return {CutoffKind::annulus, 0.0, outer}; }
    static CutoffSpec indicator(double center, double radius) { return {CutoffKind::indicator, center, radius}; }
    static CutoffSpec gaussian(double center, double sigma) { return {CutoffKind::gaussian, center, sigma}; }

    void validate() const;
    double operator()(double t) const;
    double profile(double t) const;  // height 1
    // Only for gaussian; throws otherwise.
    std::complex<double> operator()(std::complex<double> z) const;
    bool analytic() const { return kind == CutoffKind::gaussian; }
    // Closed interval outside of which the function vanishes (gaussian: below 1e-18).
    std::pair<double, double> support() const;
    // Length over which the function changes by O(1); drives panel sizes.
    double variation_scale() const;
};

}  // namespace sr
