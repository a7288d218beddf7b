#include "sr/osc.hpp"
#include "sr/parse.hpp"

#include <cmath>

namespace sr {

std::string to_string(PhaseKind k) {
    switch (k) {
        case PhaseKind::monomial: return "monomial";
        case PhaseKind::airy: return "airy";
        case PhaseKind::full_sharp: return "full_sharp";
        case PhaseKind::d4_counterexample: return "d4_counterexample";
        default: return "custom_poly";
    }
}

PhaseKind phase_kind_from_string(const std::string& s) {
    for (PhaseKind k : {PhaseKind::monomial, PhaseKind::airy, PhaseKind::full_sharp, PhaseKind::d4_counterexample,
                        PhaseKind::custom_poly})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown phase kind '" + s + "'");
}

FullSharp full_sharp(const FullSharpParams& p) {
    if (p.B < 3) throw std::invalid_argument("full_sharp: B >= 3 required");
    if (p.n < 4) throw std::invalid_argument("full_sharp: n >= 4 required");
    if (!(p.s2 > 0)) throw std::invalid_argument("full_sharp: s2 > 0 required");
    if (p.alpha == 0.0) throw std::invalid_argument("full_sharp: alpha(0) != 0 required");
    if (!p.dj.empty() && static_cast<long long>(p.dj.size()) != p.B - 3)
        throw std::invalid_argument("full_sharp: need delta_{j+2} for j = 2..B-2");
    const double n = static_cast<double>(p.n), a = p.alpha;
    FullSharp f{};
    f.G1 = 1;
    f.G2 = (n * n - n - 2) * a / 2;
    f.G3 = n * (n - 2) * a;
    f.G4 = n * (n - 1) * (n - 2) * a / 6;
    f.G5 = f.G1 * f.G3 - f.G2;
    if (std::abs(f.G5 - a * (n - 1) * (n - 2) / 2) > 1e-12 * std::abs(f.G5) || f.G5 == 0.0)
        throw std::logic_error("full_sharp: G5 = G1 G3 - G2 normalization broken");
    // Critical point of Phi1 = s1 x + s2 omega x^2 + alpha x^n, omega = -n(n-1) alpha / 2.
    double e = 1 / (n - 2);
    f.x1c = std::pow(p.s2, e);
    f.B0 = p.s1 * f.x1c - std::pow(p.s2, n * e) * f.G2;
    f.B1 = -p.s1 + std::pow(p.s2, (n - 1) * e) * f.G3;
    f.B3 = std::pow(p.s2, (n - 3) * e) * f.G4;

    int B = static_cast<int>(p.B);
    std::vector<Poly2::Term> t{{3, 0, f.B3}, {1, 0, -f.B1}, {0, 0, f.B0}, {0, B, p.b}, {0, 1, p.d30 * p.a1},
                               {1, 1, p.d0 * p.a11}};
    for (std::size_t i = 0; i < p.dj.size(); ++i) {
        double aj = i < p.aj.size() ? p.aj[i] : 1.0;
        t.push_back({0, static_cast<int>(i) + 2, p.dj[i] * aj});
    }
    f.phase = Poly2(std::move(t));
    return f;
}

double s1_for_B1(const FullSharpParams& p, double B1_target) {
    FullSharpParams q = p;
    q.s1 = 0;
    return full_sharp(q).B1 - B1_target;
}

Poly2 d4_counterexample(double delta) {
    if (!(delta > 0)) throw std::invalid_argument("d4_counterexample: delta > 0 required");
    double c2 = std::cbrt(4 * delta * delta);
    // y^k = (x2 - delta)^k expanded binomially.
    auto ypow = [&](int k, double coef, int x1pow, std::vector<Poly2::Term>& out) {
        double binom = 1;
        for (int i = 0; i <= k; ++i) {
            out.push_back({x1pow, i, coef * binom * std::pow(-delta, k - i)});
            binom = binom * (k - i) / (i + 1);
        }
    };
    std::vector<Poly2::Term> t{{3, 0, 1.0}, {0, 0, 3 * std::pow(delta, 4)}};
    ypow(4, 1.0, 0, t);
    ypow(3, 4 * delta, 0, t);
    ypow(2, -3 * c2, 1, t);
    return Poly2(std::move(t));
}

bool PhaseDescriptor::has(const std::string& key) const {
    for (const auto& [k, v] : coefficients)
        if (k == key) return true;
    return false;
}

double PhaseDescriptor::get(const std::string& key, double fallback) const {
    for (const auto& [k, v] : coefficients)
        if (k == key) return v;
    return fallback;
}

Phase1d PhaseDescriptor::phase_1d(double lambda) const {
    switch (kind) {
        case PhaseKind::monomial: return monomial_phase(static_cast<int>(get("B", 2)), get("coeff", 1));
        case PhaseKind::airy: {
            double B1 = get("B1", 0);
            if (has("B1_cone")) {
                if (!(lambda > 0)) throw std::invalid_argument("phase_1d: B1_cone needs lambda > 0");
                B1 = get("B1_cone", 0) * std::pow(lambda, -2.0 / 3);
            }
            return airy_phase(B1, get("B3", 1));
        }
        default: throw std::invalid_argument("phase_1d: " + to_string(kind) + " is a 2-D phase");
    }
}

Poly2 PhaseDescriptor::phase_2d() const {
    switch (kind) {
        case PhaseKind::full_sharp: {
            FullSharpParams p;
            p.B = static_cast<long long>(get("B", 4));
            p.n = static_cast<long long>(get("n", 11));
            p.alpha = get("alpha", 1);
            p.s2 = get("s2", 1);
            p.s1 = get("s1", 1);
            p.b = get("b", 1);
            p.d30 = get("d30", 0);
            p.a1 = get("a1", 1);
            p.d0 = get("d0", 0);
            p.a11 = get("a11", 1);
            for (long long j = 2; j <= p.B - 2; ++j) {
                std::string key = "d" + std::to_string(j + 2);
                p.dj.push_back(get(key, 0));
            }
            if (has("B1")) p.s1 = s1_for_B1(p, get("B1", 0));
            return full_sharp(p).phase;
        }
        case PhaseKind::d4_counterexample: return d4_counterexample(get("delta", 0.1));
        case PhaseKind::custom_poly: return Poly2::from(parse_poly(poly));
        default: throw std::invalid_argument("phase_2d: " + to_string(kind) + " is a 1-D phase");
    }
}

}  // namespace sr
