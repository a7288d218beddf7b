#include "sr/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sr {

cplx osc_sum_value(const OscSumProblem& p, long long M, double t) {
    const std::size_t n = p.R.size();
    if (p.beta.size() != n || p.a.size() != n) throw std::invalid_argument("osc_sum: dimension mismatch");
    std::vector<double> u(n);
    std::vector<cplx> terms;
    for (long long l = 0; l <= M; ++l) {
        bool inside = true;
        for (std::size_t k = 0; k < n; ++k) {
            u[k] = std::exp2(p.beta[k] * static_cast<double>(l)) * p.a[k];
            inside = inside && std::abs(u[k]) <= p.R[k];
        }
        if (!inside) continue;
        // 2^{i alpha l t}; the phase is reduced mod 2 pi before exponentiating
        double ph = std::fmod(p.alpha * static_cast<double>(l) * t * std::numbers::ln2, 2 * std::numbers::pi);
        terms.push_back(std::polar(p.H(u), ph));
    }
    cplx s = 0;
    for (const auto& z : terms) s += z;
    return s;
}

std::vector<OscSumProblem> osc_sum_default_problems() {
    std::vector<OscSumProblem> out;
    OscSumProblem one;
    one.name = "constant";
    one.H = [](const std::vector<double>&) { return 1.0; };
    one.R = {1};
    one.alpha = 1;
    one.beta = {-1};
    one.a = {0.75};
    one.C = {0};
    out.push_back(one);

    OscSumProblem lin;
    lin.name = "linear";
    lin.H = [](const std::vector<double>& u) { return u[0]; };
    lin.R = {1};
    lin.alpha = 1;
    lin.beta = {1};
    lin.a = {0.7 * std::exp2(-12)};
    lin.C = {1};  // int_0^1 |dH/du1(su)| ds = 1 = |u1|^{eps-1} with eps = 1
    out.push_back(lin);

    OscSumProblem two;
    two.name = "product";
    two.H = [](const std::vector<double>& u) { return u[0] * std::cos(u[1]); };
    two.R = {1, 1};
    two.alpha = std::sqrt(2.0);
    two.beta = {1, 0.5};
    two.a = {std::exp2(-10), std::exp2(-6)};
    two.C = {1, 1};  // |cos| <= 1 and |u1 s sin(s u2)| <= R1, eps = 1
    out.push_back(two);
    return out;
}

BoundCheck check_osc_sum(const OscSumProblem& p, const OscSumOptions& o) {
    BoundCheck c;
    c.lemma_id = "osc_sum:" + p.name;
    c.block_levels = o.block_levels;
    std::vector<double> ts = o.t_grid;
    const double period = 2 * std::numbers::pi / (std::abs(p.alpha) * std::numbers::ln2);
    if (ts.empty())
        for (int k = 0; k < 97; ++k) ts.push_back(period * (k + 0.5) / 97);
    double num = std::abs(p.H(std::vector<double>(p.R.size(), 0.0)));
    for (double ck : p.C) num += ck;
    double worst_closed = 0;
    bool closed = p.name == "constant";
    for (long long M : o.M_list)
        for (double t : ts) {
            GridPoint g;
            g.params = {{"M", static_cast<double>(M)}, {"t", t}};
            g.level = static_cast<int>(std::lround(std::log2(static_cast<double>(M))));
            cplx den = std::polar(1.0, p.alpha * t * std::numbers::ln2) - 1.0;
            if (std::abs(den) < o.min_gap) {
                g.status = PointStatus::skipped;
                g.note = "t too close to the singular set";
                c.grid.push_back(g);
                continue;
            }
            cplx F = osc_sum_value(p, M, t);
            g.quantity = std::abs(F);
            g.bound = num / std::abs(den);
            g.ratio = num > 0 ? g.quantity / g.bound : 0.0;
            if (closed) {
                // sum_{l=0}^{M} z^l = (z^{M+1} - 1)/(z - 1)
                double ph = std::fmod(p.alpha * static_cast<double>(M + 1) * t * std::numbers::ln2, 2 * std::numbers::pi);
                cplx exact = (std::polar(1.0, ph) - 1.0) / den;
                worst_closed = std::max(worst_closed, std::abs(F - exact) / (1 + std::abs(exact)));
                // the closed form is bounded by 2/|z - 1|
                g.bound = 2 / std::abs(den);
                g.ratio = g.quantity / g.bound;
            }
            c.grid.push_back(g);
        }
    if (closed) {
        c.assertions.push_back({"closed form sum_{l<=M} z^l = (z^{M+1}-1)/(z-1)", worst_closed <= 1e-11,
                                "max relative deviation " + std::to_string(worst_closed)});
        c.notes.push_back("H = 1 on Q: ratio against the exact bound 2/|2^{i alpha t}-1|");
    }
    finalize(c);
    return c;
}

double dyadic_C1(const std::vector<double>& beta) {
    double n = static_cast<double>(beta.size()), m = 0;
    for (std::size_t k = 0; k < beta.size(); ++k)
        for (std::size_t l = k + 1; l < beta.size(); ++l) m = std::max(m, 1 / std::abs(beta[k] - beta[l]));
    // each closed window of length 4/|beta_k - beta_l| holds at most 4/|...| + 1 integers
    return n * (n - 1) / 2 * (4 * m + 1);
}

double dyadic_C2(const std::vector<double>& beta) {
    double fact = 1, m = 0;
    for (std::size_t k = 1; k <= beta.size(); ++k) fact *= static_cast<double>(k);
    for (double b : beta) m = std::max(m, 1 / (1 - std::exp2(-b)));
    return 1.5 * fact * m;
}

DyadicSumTrial dyadic_sum_trial(const std::vector<double>& alpha, const std::vector<double>& beta, int j_min,
                                int j_max) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("dyadic_sum: dimension mismatch");
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (!(beta[k] > 0)) throw std::invalid_argument("dyadic_sum: beta_k > 0 required");
        for (std::size_t l = k + 1; l < beta.size(); ++l)
            if (beta[k] == beta[l]) throw std::invalid_argument("dyadic_sum: beta pairwise distinct required");
    }
    DyadicSumTrial t;
    t.alpha = alpha;
    t.min_abs_outside = std::numeric_limits<double>::infinity();
    std::vector<double> inv;
    for (int j = j_min; j <= j_max; ++j) {
        double top = 0, s = 0;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            double term = std::exp2(beta[k] * j) * alpha[k];
            top = std::max(top, std::abs(term));
            s += term;
        }
        if (top < 1) continue;  // lambda = 2^j not in Lambda
        ++t.lambda_size;
        bool exceptional = false;
        for (std::size_t k = 0; k < alpha.size() && !exceptional; ++k)
            for (std::size_t l = 0; l < alpha.size() && !exceptional; ++l) {
                if (beta[k] <= beta[l] || alpha[k] == 0 || alpha[l] == 0) continue;
                double d = beta[k] - beta[l];
                exceptional = std::abs(j + std::log2(std::abs(alpha[k] / alpha[l])) / d) <= 2 / d;
            }
        if (exceptional) {
            ++t.exceptional;
            continue;
        }
        t.min_abs_outside = std::min(t.min_abs_outside, std::abs(s));
        inv.push_back(1 / std::abs(s));
    }
    std::sort(inv.begin(), inv.end());
    for (double v : inv) t.inverse_sum += v;
    return t;
}

BoundCheck check_dyadic_sum_lemma(const DyadicSumOptions& o) {
    BoundCheck c;
    c.lemma_id = "dyadic_sum";
    c.verdict_rule = "explicit";
    const double C1 = dyadic_C1(o.beta), C2 = dyadic_C2(o.beta);
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<std::vector<double>> alphas;
    for (int i = 0; i < o.trials; ++i) {
        std::vector<double> a(o.beta.size());
        for (auto& x : a) x = U(rng);
        alphas.push_back(a);
    }
    alphas.insert(alphas.end(), o.alphas.begin(), o.alphas.end());
    std::size_t bad_card = 0, bad_min = 0, bad_sum = 0;
    for (const auto& a : alphas) {
        DyadicSumTrial t = dyadic_sum_trial(a, o.beta, o.j_min, o.j_max);
        GridPoint g;
        for (std::size_t k = 0; k < a.size(); ++k) g.params.push_back({"alpha" + std::to_string(k + 1), a[k]});
        g.params.push_back({"exceptional", static_cast<double>(t.exceptional)});
        g.params.push_back({"min_abs", std::isfinite(t.min_abs_outside) ? t.min_abs_outside : 0.0});
        g.quantity = t.inverse_sum;
        g.bound = C2;
        g.ratio = t.inverse_sum / C2;
        c.grid.push_back(g);
        bad_card += static_cast<double>(t.exceptional) > C1;
        bad_min += t.min_abs_outside < 2.0 / 3;
        bad_sum += t.inverse_sum > C2;
    }
    std::string of = " of " + std::to_string(alphas.size()) + " trials";
    c.assertions.push_back({"|Lambda_e| <= C1", bad_card == 0, std::to_string(bad_card) + " failures" + of});
    c.assertions.push_back({"|sum| >= 2/3 off Lambda_e", bad_min == 0, std::to_string(bad_min) + " failures" + of});
    c.assertions.push_back({"sum 1/|sum| <= C2", bad_sum == 0, std::to_string(bad_sum) + " failures" + of});
    c.notes.push_back("C1 = " + std::to_string(C1) + ", C2 = " + std::to_string(C2) + ", j in [" +
                      std::to_string(o.j_min) + ", " + std::to_string(o.j_max) + "]");
    finalize(c);
    return c;
}

}  // namespace sr
