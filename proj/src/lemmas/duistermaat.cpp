#include "detail/parallel.hpp"
#include "sr/lemmas.hpp"

#include <cmath>

namespace sr {

std::vector<DuistermaatCoeffs> duistermaat_default_directions(long long B) {
    if (B == 4)
        return {{1, 0, 0, 0},  {-1, 0, 0, 0},   {0, 1, 0, 0},     {0, 0, 1, 0},   {0, 0, -1, 0},
                {0.5, 0.5, -1, 0}, {-0.5, 1, 0.5, 0}, {0, 0, 0, 1}, {0.5, 0.3, -1, 1}, {-1, 0.2, 0, 1}};
    if (B == 3)
        return {{1, 0, 0, 0},    {-1, 0, 0, 0},     {0, 1, 0, 0},      {0, -1, 0, 0}, {1, -1, 0, 0},
                {1, 0, 0, 0.45}, {-1, 0.5, 0, 0.4}, {0, -1, 0, 0.45}, {0, 0, 0, 1}};
    throw std::invalid_argument("duistermaat: B = 3 or 4");
}

namespace {

RhoCoefficients rho_part(long long B, const DuistermaatCoeffs& c) {
    RhoCoefficients r{B, c.d30, {}, c.d0};
    if (B == 4) r.rest.push_back(c.d4);
    return r;
}

Branch branch_of(const DuistermaatCoeffs& c) { return c.d0 != 0 ? Branch::D : Branch::ND; }

// rho~ is homogeneous of degree one under this scaling.
DuistermaatCoeffs scale(long long B, const DuistermaatCoeffs& c, double r) {
    RhoCoefficients s = duistermaat_scale(rho_part(B, c), r, branch_of(c));
    DuistermaatCoeffs out{c.B1 * std::cbrt(r * r), s.d30, B == 4 ? s.rest[0] : 0.0, s.d0};
    return out;
}

}  // namespace

double rho_tilde(long long B, const DuistermaatCoeffs& c) {
    return rho(rho_part(B, c), branch_of(c)).value + std::pow(std::abs(c.B1), 1.5);
}

Poly2 duistermaat_phase(long long B, const DuistermaatCoeffs& c) {
    FullSharpParams p;
    p.B = B;
    p.n = 11;
    // alpha chosen so that B3 = G4 = 1 at s2 = 1
    p.alpha = 6.0 / static_cast<double>(p.n * (p.n - 1) * (p.n - 2));
    p.s2 = 1;
    p.b = 1;
    p.d30 = c.d30;
    p.d0 = c.d0;
    if (B == 4) p.dj = {c.d4};
    p.s1 = s1_for_B1(p, c.B1);
    return full_sharp(p).phase;
}

BoundCheck check_duistermaat_uniform(const DuistermaatOptions& o) {
    if (o.B != 3 && o.B != 4) throw std::invalid_argument("check_duistermaat_uniform: B = 3 or 4");
    if (o.lambda_min_exp > o.lambda_max_exp) throw std::invalid_argument("check_duistermaat_uniform: empty lambda range");
    BoundCheck c;
    c.lemma_id = o.B == 4 ? "duistermaat_uniform_B4" : "duistermaat_uniform_B3";
    c.block_levels = o.block_levels;
    std::vector<DuistermaatCoeffs> coeffs = o.points;
    if (coeffs.empty()) {
        auto dirs = o.directions.empty() ? duistermaat_default_directions(o.B) : o.directions;
        for (const auto& d : dirs) {
            double r0 = rho_tilde(o.B, d);
            if (!(r0 > 0)) throw std::invalid_argument("check_duistermaat_uniform: zero direction");
            DuistermaatCoeffs unit = scale(o.B, d, 1 / r0);
            for (int k : o.r_exps) coeffs.push_back(scale(o.B, unit, std::ldexp(1.0, k)));
        }
    }
    struct Task {
        DuistermaatCoeffs d;
        int k;
    };
    std::vector<Task> tasks;
    for (const auto& d : coeffs)
        for (int k = o.lambda_min_exp; k <= o.lambda_max_exp; ++k) tasks.push_back({d, k});
    const double a = o.B == 4 ? 1.0 / 12 : 1.0 / 6, e = o.B == 4 ? 2.0 / 3 : 5.0 / 6;
    CutoffSpec amp = CutoffSpec::gaussian(0, o.sigma);
    Quad2dConfig cfg;
    cfg.base.rel_tol = o.common.tol;
    // Also for separable phases: the contour damps the oscillating gaussian tails.
    cfg.route = Route2d::deformed;
    c.grid = detail::parallel_map<GridPoint>(
        tasks.size(),
        [&](std::size_t i) {
            const auto& [d, k] = tasks[i];
            double lam = std::ldexp(1.0, k), rt = rho_tilde(o.B, d);
            GridPoint g;
            g.params = {{"B1", d.B1}, {"d30", d.d30}, {"d4", d.d4}, {"d0", d.d0}, {"rho_tilde", rt}, {"lambda", lam}};
            g.level = k;
            if (std::abs(d.B1) > 1) {
                g.status = PointStatus::skipped;
                g.note = "grid restricted to |B1| <= 1";
                return g;
            }
            if (o.B == 3 && rt < o.common.M * d.d0 * d.d0 * d.d0) {
                g.status = PointStatus::skipped;
                g.note = "needs rho~ >= M delta0^3";
                return g;
            }
            try {
                g.quantity = std::abs(integrate_osc_2d(duistermaat_phase(o.B, d), amp, amp, lam, cfg).value);
            } catch (const std::exception& ex) {
                g.status = PointStatus::failed;
                g.note = ex.what();
                return g;
            }
            g.bound = rt > 0 ? std::pow(rt, -a) * std::pow(lam, -e) : std::numeric_limits<double>::infinity();
            g.ratio = rt > 0 ? g.quantity / g.bound : 0.0;
            return g;
        },
        o.common.threads);
    c.notes.push_back("amplitude: gaussian of width " + std::to_string(o.sigma) +
                      " in x1 and x2; model functions constant, B3 = b = 1");
    c.notes.push_back("grid restricted to |B1| <= 1");
    finalize(c);
    return c;
}

std::vector<CounterexampleFit> check_counterexample(const CounterexampleOptions& o) {
    std::vector<CounterexampleFit> out;
    Quad2dConfig cfg;
    cfg.base.rel_tol = o.tol;
    for (double delta : o.deltas) {
        if (!(delta > 0) || delta > 0.3) throw std::invalid_argument("check_counterexample: delta in (0, 0.3]");
        OscIntegralSpec spec{PhaseDescriptor{PhaseKind::d4_counterexample, {{"delta", delta}}, ""},
                             CutoffSpec::gaussian(0, o.sigma), CutoffSpec::gaussian(0, o.sigma),
                             dyadic_grid(o.lambda_min_exp, o.lambda_max_exp)};
        DecayFit f = decay_fit(spec, cfg);
        out.push_back({delta, f, std::abs(f.slope - o.target_slope) <= o.slope_tol,
                       f.slope > o.lemma_slope + o.margin});
    }
    return out;
}

}  // namespace sr
