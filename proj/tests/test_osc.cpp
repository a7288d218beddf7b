#include <doctest.h>

#include "sr/osc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace sr;

namespace {
constexpr double pi = std::numbers::pi;

double slope_1d(const Phase1d& ph, const CutoffSpec& a, int kmin, int kmax) {
    std::vector<DecayPoint> pts;
    for (double lam : dyadic_grid(kmin, kmax)) pts.push_back({lam, integrate_osc_1d(ph, a, lam).value});
    return fit_decay(pts).slope;
}
}  // namespace

TEST_CASE("1-D: lambda = 0 gives the integral of the amplitude") {
    CutoffSpec a = CutoffSpec::bump(0, 1);
    QuadResult r = integrate_osc_1d(monomial_phase(1), a, 0);
    CHECK(r.value.imag() == 0.0);
    CHECK(r.value.real() > 0);
    // plateau of length 1 plus two symmetric transitions of total length 1
    CHECK(r.value.real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(r.abs_integral == doctest::Approx(r.value.real()).epsilon(1e-12));
}

TEST_CASE("1-D: stationary phase for t^2") {
    CutoffSpec a = CutoffSpec::bump(0, 1);
    double lam = std::ldexp(1.0, 14);
    cplx v = integrate_osc_1d(monomial_phase(2), a, lam).value;
    cplx lead = std::sqrt(pi / lam) * std::polar(1.0, pi / 4);
    CHECK(std::abs(v - lead) / std::abs(lead) < 0.05);
}

TEST_CASE("1-D: decay slopes") {
    CutoffSpec a = CutoffSpec::bump(0, 1);
    CHECK(std::abs(slope_1d(monomial_phase(2), a, 8, 16) + 0.5) < 0.03);
    CHECK(std::abs(slope_1d(monomial_phase(3), a, 8, 16) + 1.0 / 3) < 0.03);
    CHECK(std::abs(slope_1d(monomial_phase(4), a, 8, 16) + 0.25) < 0.03);
}

TEST_CASE("1-D: conjugation, trivial bound and resolution failure") {
    CutoffSpec a = CutoffSpec::bump(0.2, 0.7);
    Phase1d ph = poly_phase_1d({0, 0.3, -1, 0.5, 1});
    for (double lam : {3.0, 100.0, 5000.0}) {
        QuadResult p = integrate_osc_1d(ph, a, lam), m = integrate_osc_1d(ph, a, -lam);
        CHECK(std::abs(m.value - std::conj(p.value)) <= 1e-12 * p.abs_integral);
        CHECK(std::abs(p.value) <= p.abs_integral * (1 + 1e-12));
        CHECK(p.error <= 1e-7 * std::max(std::abs(p.value), 1e-10 * p.abs_integral));
    }
    QuadConfig tiny;
    tiny.max_nodes = 200;
    CHECK_THROWS_AS(integrate_osc_1d(ph, a, 1e6, tiny), QuadratureFailure);
    QuadConfig coarse;
    coarse.nodes_per_wavelength = 5;
    CHECK_THROWS_AS(integrate_osc_1d(ph, a, 10, coarse), std::invalid_argument);
}

TEST_CASE("1-D: gaussian amplitude against the closed form") {
    // int exp(i lam t - t^2/2) dt = sqrt(2 pi) exp(-lam^2/2)
    CutoffSpec g = CutoffSpec::gaussian(0, 1);
    for (double lam : {0.5, 2.0, 4.0}) {
        cplx v = integrate_osc_1d(monomial_phase(1), g, lam).value;
        CHECK(std::abs(v - std::sqrt(2 * pi) * std::exp(-lam * lam / 2)) < 1e-12);
    }
}

TEST_CASE("Poly2 evaluation and derivatives") {
    Poly2 p({{3, 0, 1}, {1, 2, -2}, {0, 4, 0.5}, {0, 0, 7}});
    cplx x1(0.3, 0.1), x2(-0.7, 0.2), v;
    std::array<cplx, 2> g;
    std::array<cplx, 3> h;
    p.eval2(x1, x2, v, g, h);
    CHECK(std::abs(v - p.value(x1, x2)) < 1e-14);
    CHECK(std::abs(v - (x1 * x1 * x1 - 2.0 * x1 * x2 * x2 + 0.5 * std::pow(x2, 4) + 7.0)) < 1e-13);
    CHECK(std::abs(g[0] - (3.0 * x1 * x1 - 2.0 * x2 * x2)) < 1e-13);
    CHECK(std::abs(g[1] - (-4.0 * x1 * x2 + 2.0 * x2 * x2 * x2)) < 1e-13);
    CHECK(std::abs(h[0] - 6.0 * x1) < 1e-13);
    CHECK(std::abs(h[1] + 4.0 * x2) < 1e-13);
    CHECK(std::abs(h[2] - (-4.0 * x1 + 6.0 * x2 * x2)) < 1e-13);
    CHECK_FALSE(p.split());
    auto s = Poly2({{3, 0, 1}, {0, 4, 2}}).split();
    REQUIRE(s);
    CHECK(s->first[3] == 1);
    CHECK(s->second[4] == 2);
}

TEST_CASE("2-D: separable phase equals the product of 1-D values") {
    CutoffSpec a = CutoffSpec::bump(0, 1);
    Poly2 p({{3, 0, 1}, {0, 4, 1}});
    for (double lam : {10.0, 300.0, 4096.0}) {
        QuadResult2d r = integrate_osc_2d(p, a, a, lam);
        CHECK(r.route == Route2d::separable);
        cplx prod = integrate_osc_1d(monomial_phase(3), a, lam).value * integrate_osc_1d(monomial_phase(4), a, lam).value;
        CHECK(std::abs(r.value - prod) <= 1e-8 * std::abs(prod));
    }
    // The same integral by direct cubature at moderate lambda.
    Quad2dConfig direct;
    direct.route = Route2d::direct;
    direct.base.rel_tol = 1e-10;
    for (double lam : {4.0, 40.0}) {
        cplx s = integrate_osc_2d(p, a, a, lam).value;
        cplx d = integrate_osc_2d(p, a, a, lam, direct).value;
        CHECK(std::abs(s - d) <= 1e-8 * std::abs(s));
    }
}

TEST_CASE("2-D: zero amplitude gives 0") {
    CutoffSpec a = CutoffSpec::bump(0, 1), z = CutoffSpec::bump(0, 1);
    z.height = 0;
    Poly2 p = d4_counterexample(0.1);
    Quad2dConfig direct;
    direct.route = Route2d::direct;
    CHECK(integrate_osc_2d(p, a, z, 50, direct).value == cplx(0));
    CHECK(integrate_osc_1d(monomial_phase(3), z, 50).value == cplx(0));
}

TEST_CASE("2-D: deformed contour agrees with direct cubature") {
    CutoffSpec g = CutoffSpec::gaussian(0, 0.3);
    Poly2 p = d4_counterexample(0.1);
    Quad2dConfig deformed, direct;
    deformed.route = Route2d::deformed;
    direct.route = Route2d::direct;
    direct.base.rel_tol = deformed.base.rel_tol = 1e-10;
    for (double lam : {4.0, 12.0, 24.0}) {
        QuadResult2d a = integrate_osc_2d(p, g, g, lam, deformed), b = integrate_osc_2d(p, g, g, lam, direct);
        CHECK(std::abs(a.value - b.value) <= 1e-7 * std::abs(b.value));
        CHECK(std::abs(a.value) <= a.abs_integral);
        QuadResult2d c = integrate_osc_2d(p, g, g, -lam, deformed);
        CHECK(std::abs(c.value - std::conj(a.value)) <= 1e-12 * a.abs_integral);
    }
}

TEST_CASE("full_sharp normalizations") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.2, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        FullSharpParams p;
        p.n = 5 + trial % 9;
        p.alpha = U(rng) * (trial % 2 ? 1 : -1);
        p.s1 = U(rng) - 1;
        p.s2 = U(rng);
        FullSharp f = full_sharp(p);
        double n = static_cast<double>(p.n), a = p.alpha;
        CHECK(f.G1 == 1);
        CHECK(f.G2 == doctest::Approx((n * n - n - 2) * a / 2));
        CHECK(f.G3 == doctest::Approx(n * (n - 2) * a));
        CHECK(f.G5 == doctest::Approx(f.G1 * f.G3 - f.G2));
        CHECK(f.G5 != 0.0);
        // Taylor data of Phi1 = s1 x + s2 omega x^2 + alpha x^n at its inflection point.
        double w = -n * (n - 1) * a / 2, x = f.x1c;
        double d0 = p.s1 * x + p.s2 * w * x * x + a * std::pow(x, n);
        double d1 = p.s1 + 2 * p.s2 * w * x + n * a * std::pow(x, n - 1);
        double d2 = 2 * p.s2 * w + n * (n - 1) * a * std::pow(x, n - 2);
        double d3 = n * (n - 1) * (n - 2) * a * std::pow(x, n - 3);
        CHECK(d2 == doctest::Approx(0).scale(std::abs(p.s2 * w)));
        CHECK(f.B0 == doctest::Approx(d0));
        CHECK(f.B1 == doctest::Approx(-d1));
        CHECK(f.B3 == doctest::Approx(d3 / 6));
        CHECK(full_sharp([&] {
                  FullSharpParams q = p;
                  q.s1 = s1_for_B1(p, 0.25);
                  return q;
              }())
                  .B1 == doctest::Approx(0.25));
    }
    FullSharpParams bad;
    bad.n = 3;
    CHECK_THROWS(full_sharp(bad));
}

TEST_CASE("d4 counterexample phase") {
    for (double delta : {0.05, 0.1, 0.3}) {
        Poly2 p = d4_counterexample(delta);
        CHECK(std::abs(p.value(0.0, 0.0)) < 1e-15);
        double c2 = std::cbrt(4 * delta * delta);
        for (double x1 : {-0.4, 0.1, 0.7})
            for (double x2 : {-0.5, 0.0, 0.35}) {
                double y = x2 - delta;
                double direct = x1 * x1 * x1 + std::pow(y, 4) + 4 * delta * y * y * y - 3 * c2 * x1 * y * y +
                                3 * std::pow(delta, 4);
                CHECK(p.value(x1, x2) == doctest::Approx(direct).epsilon(1e-12).scale(1));
            }
    }
}

TEST_CASE("phase descriptors") {
    PhaseDescriptor d{PhaseKind::airy, {{"B1_cone", 1.0}}, ""};
    Phase1d ph = d.phase_1d(8.0);
    CHECK(ph.f(1.0) == doctest::Approx(1.0 - 0.25));
    CHECK_THROWS(d.phase_2d());
    PhaseDescriptor fs{PhaseKind::full_sharp, {{"B", 4}, {"B1", 0.0}}, ""};
    Poly2 q = fs.phase_2d();
    CHECK(q.split());
    for (PhaseKind k : {PhaseKind::monomial, PhaseKind::airy, PhaseKind::full_sharp, PhaseKind::d4_counterexample,
                        PhaseKind::custom_poly})
        CHECK(phase_kind_from_string(to_string(k)) == k);
    PhaseDescriptor c{PhaseKind::custom_poly, {}, "x1^3 + x1*x2^2"};
    CHECK(c.phase_2d().value(1.0, 2.0) == 5.0);
}

TEST_CASE("decay fit plumbing") {
    CHECK_THROWS(fit_decay({{1, 1}, {2, 1}, {4, 1}}));
    std::vector<DecayPoint> pts;
    for (double lam : dyadic_grid(3, 10)) pts.push_back({lam, cplx(0, 5 * std::pow(lam, -0.625))});
    DecayFit f = fit_decay(pts);
    CHECK(f.slope == doctest::Approx(-0.625));
    CHECK(f.max_residual < 1e-12);
    CHECK(f.lambda_range.first == 8);
    std::string csv = decay_csv(f);
    CHECK(csv.rfind("lambda,re,im,abs,log2_abs\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

    OscIntegralSpec spec{PhaseDescriptor{PhaseKind::airy, {{"B1_cone", 1.0}}, ""}, CutoffSpec::bump(0, 1),
                         CutoffSpec::bump(0, 1), dyadic_grid(8, 16)};
    CHECK(std::abs(decay_fit(spec).slope + 1.0 / 3) < 0.05);
}

TEST_CASE("absolute integrals") {
    AbsIntegrand2d one{[](double, double) { return 1.0; }, nullptr, {}};
    CHECK(integrate_abs_2d(one, {0, 1, 0, 1}, 1e-10) == doctest::Approx(1.0).epsilon(1e-12));

    double R = power_tail_radius(4, 1e-11);
    // int_{|t|>R} (1+|t|)^-4 = (2/3)(1+R)^-3
    CHECK((2.0 / 3) * std::pow(1 + R, -3) == doctest::Approx(1e-11));
    auto f = [](double a, double b) { return std::pow(1 + std::abs(a), -4) * std::pow(1 + std::abs(b), -4); };
    std::vector<double> br = graded_breaks(0, 1, -R, R);
    AbsIntegrand2d g{f, [&](double) { return br; }, br};
    CHECK(integrate_abs_2d(g, {-R, R, -R, R}, 1e-11) == doctest::Approx(4.0 / 9).epsilon(1e-9));

    double err = 0;
    double v = integrate_abs_1d([](double t) { return std::sqrt(std::abs(t)); }, -1, 1, {0}, 1e-12, &err);
    CHECK(v == doctest::Approx(4.0 / 3).epsilon(1e-11));
    CHECK(err < 1e-11);

    auto roots = real_poly_roots({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(1));
    CHECK(roots[2] == doctest::Approx(3));
    CHECK(real_poly_roots({1, 0, 1}).empty());
    CHECK(real_poly_roots({5}).empty());
}
