#include "sr/restriction.hpp"

#include "sr/parse.hpp"
#include "sr/upoly.hpp"

#include <cmath>
#include <stdexcept>

namespace sr {

std::string to_string(CaseAB c) { return c == CaseAB::a ? "a" : "b"; }

std::string to_string(Branch b) {
    switch (b) {
        case Branch::ND: return "ND";
        case Branch::D: return "D";
        default: return "n.a.";
    }
}

LinearHeight linear_height(const PuiseuxPoly& p) {
    if (!p.has_integer_exponents()) throw std::invalid_argument("linear_height: polynomial input required");
    LinearHeight best{newton_distance(newton_polyhedron(p)), 0, false};
    UPoly P = restrict_x1_to_one(lowest_degree_part(p));
    for (const auto& root : rational_roots(P)) {
        if (root.value.is_zero()) continue;
        Rational d = newton_distance(newton_polyhedron(substitute_shear(p, root.value, 1)));
        if (d > best.h_lin) best = {d, root.value, false};
    }
    best.lower_bound_only = count_real_roots(strip_rational_roots(P)) > 0;
    return best;
}

namespace {

// Nonzero rational root of maximal multiplicity >= 2, if any.
std::optional<Rational> multiple_root(const UPoly& P) {
    std::optional<RationalRoot> best;
    for (const auto& r : rational_roots(P)) {
        if (r.value.is_zero() || r.multiplicity < 2) continue;
        if (!best || r.multiplicity > best->multiplicity) best = r;
    }
    if (!best) return std::nullopt;
    return best->value;
}

std::optional<Weight> compact_edge_weight(const NewtonPolyhedron& np, Face* out = nullptr) {
    Face f = principal_face(np);
    if (out) *out = f;
    if (f.kind != FaceKind::edge || !f.compact()) return std::nullopt;
    return principal_weight(f);
}

}  // namespace

RestrictionReport classify(const PuiseuxPoly& p, const ClassifyOptions& opt) {
    if (p.terms().empty()) throw std::invalid_argument("classify: zero polynomial");
    RestrictionReport r;
    r.input = render_poly(p);
    r.m = opt.m;
    NewtonPolyhedron np = newton_polyhedron(p);
    Face face;
    std::optional<Weight> kappa = compact_edge_weight(np, &face);
    r.d = newton_distance(np);
    if (face.kind == FaceKind::vertex)
        r.case_ab = CaseAB::b;
    else if (face.compact())
        r.case_ab = CaseAB::a;

    if (p.has_integer_exponents()) {
        LinearHeight lh = linear_height(p);
        r.h_lin = lh.h_lin;
        r.h_lin_lower_bound_only = lh.lower_bound_only;
    } else {
        r.h_lin = r.d;
        r.h_lin_lower_bound_only = true;
        r.gaps.push_back("h_lin: fractional exponents, only the Newton distance is known");
    }
    if (!p.has_integer_x2_exponents()) {
        r.gaps.push_back("fractional x2-exponents: outside the normal-form family");
        return r;
    }

    // Remove multiple roots of the principal part, x2 -> x2 + c x1^a,
    // until the principal part of phi~ has none.
    PuiseuxPoly phi = p;
    Rational last_a = 1;
    std::optional<Weight> kt = kappa;
    for (int step = 0; step < 8 && kt; ++step) {
        std::optional<Rational> y0 = multiple_root(restrict_x1_to_one(kappa_principal_part(phi, *kt)));
        if (!y0) break;
        if (step > 0 && kt->m() <= last_a) break;
        last_a = kt->m();
        phi = substitute_shear(phi, *y0, last_a);
        r.shear_a = last_a;
        r.shear_c = *y0;
        NewtonPolyhedron next = newton_polyhedron(phi);
        kt = compact_edge_weight(next);
        if (step > 0) r.gaps.push_back("more than one shear was needed; shear records the last one");
    }
    r.phi_tilde = render_poly(phi);
    NewtonPolyhedron npt = newton_polyhedron(phi);
    Face ft;
    kt = compact_edge_weight(npt, &ft);
    if (!kt) {
        r.gaps.push_back("principal face of phi~ is not a compact edge: kappa~, B, A, H, n undefined");
    } else {
        r.kappa_tilde = *kt;
        r.n = Rational(1) / kt->k1;
        r.H = Rational(1) / kt->k2;
        PuiseuxPoly pp = kappa_principal_part(phi, *kt);
        std::optional<Rational> bmin;
        for (const auto& [e, c] : pp.terms())
            if (e.e2 >= 1 && (!bmin || e.e2 < *bmin)) bmin = e.e2;
        if (!bmin) {
            r.gaps.push_back("principal part of phi~ has no x2-term: B undefined");
        } else {
            const Point2& left = ft.points.front();
            if (left.t2 != *bmin) {
                r.gaps.push_back("left endpoint " + left.str() + " of the principal face is not (A,B) with B = " +
                                 bmin->str());
            } else if (!left.t1.is_integer()) {
                r.gaps.push_back("left endpoint " + left.str() + " has non-integer A");
            } else {
                r.B = bmin->to_int();
                r.A = left.t1.to_int();
            }
        }
    }

    try {
        Weight L = supporting_weight(npt, r.m);
        r.kappa_L = L;
        r.d = L.distance();
        NewtonPolyhedron nr = augmented_polyhedron(npt, L);
        r.hr = r_height(nr, r.m);
        r.p_c_prime = 2 * *r.hr + 2;
        r.theta_c = Rational(1) / (*r.hr + 1);
    } catch (const std::exception& e) {
        r.gaps.push_back(std::string("augmented polyhedron: ") + e.what());
    }
    if (r.kappa_tilde && r.kappa_tilde->m() <= r.m)
        r.gaps.push_back("principal line of phi~ is not flatter than 1/m (needs n > A + mB)");

    if (r.B && *r.B >= 3 && r.n) {
        bool degenerate = opt.n1 && r.n->is_integer() && Rational(*opt.n1) == *r.n - 2;
        r.nd_or_d = degenerate ? Branch::D : Branch::ND;
    }
    return r;
}

RestrictionReport classify(const std::string& text, const ClassifyOptions& opt) {
    RestrictionReport r = classify(parse_poly(text), opt);
    return r;
}

std::vector<std::string> RestrictionReport::invariant_violations() const {
    std::vector<std::string> v;
    if (hr) {
        if (!p_c_prime || *p_c_prime != 2 * *hr + 2) v.push_back("p_c_prime = 2 hr + 2");
        if (!theta_c || *theta_c * (*hr + 1) != 1) v.push_back("theta_c (hr + 1) = 1");
        if (*hr < d) v.push_back("hr >= d");
    }
    if (m < 2) v.push_back("m >= 2");
    if (B && kappa_tilde && kappa_tilde->k2 * Rational(*B) <= 1 && Rational(*B) > *H) v.push_back("B <= H");
    return v;
}

Rational family_hr_plus_one(long long A, long long B, long long n) {
    return Rational(n + 3) * Rational(B) / Rational(n + B - A);
}

Rational p_tilde_c_prime(const Rational& m, const Rational& H) { return 2 * (m * H / (m + 1) + 1); }
Rational p_H_prime(const Rational& H) { return 12 * H / (3 + H); }
Rational theta_B(const Rational& B) { return Rational(1) / (2 * B) + Rational(1, 6); }
Rational theta_tilde_B(const Rational& m, const Rational& B) { return (m + 1) / (m * B + m + 1); }
Rational M_poly(const Rational& m, const Rational& B) { return m * B * B - (3 * m + 6) * B + 3 * (m + 1); }
Rational H_threshold(const Rational& B) { return Rational(21, 2) * B / (B + 3) - Rational(3, 2); }

Rational H_of_B(long long B) {
    if (B == 4) return Rational(9, 2);
    if (B == 5) return Rational(81, 16);
    throw std::invalid_argument("H(B) is defined for B = 4, 5");
}

Rational bak_seeger_p0(const Rational& a, const Rational& b) { return 2 * (a + b) / (2 * a + b); }

namespace {
NamedCheck check(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }
}  // namespace

std::vector<NamedCheck> exponent_lemmas(const RestrictionReport& r) {
    std::vector<NamedCheck> out;
    if (!r.H || !r.B || !r.hr) return out;
    const Rational &m = r.m, &H = *r.H, &hr = *r.hr;
    Rational B(*r.B);
    Rational ptc = p_tilde_c_prime(m, H), pH = p_H_prime(H), pB = p_H_prime(B);
    Rational htr = m * H / (m + 1);
    Rational thc = *r.theta_c, thtc = 2 / ptc;

    bool strict_case = hr == htr && hr == r.d && hr + 1 >= H;
    out.push_back(check("lemma3.1a: p'_c >= p~'_c, equality iff h^r = h~^r = d and h^r+1 >= H",
                        strict_case ? *r.p_c_prime == ptc : *r.p_c_prime > ptc,
                        "p'_c = " + r.p_c_prime->str() + ", p~'_c = " + ptc.str()));
    if ((m >= 3 && H >= 2) || (m == 2 && H >= 3)) {
        bool strict = !(m == 2 && H == 3);
        bool ok = (strict ? ptc > pH : ptc == pH) && pH >= pB;
        out.push_back(check("lemma3.1b: p~'_c >= p'_H >= p'_B", ok,
                            "p~'_c = " + ptc.str() + ", p'_H = " + pH.str() + ", p'_B = " + pB.str()));
        Rational q = m * H * H - (2 * m + 5) * H + 3 * m + 3;
        out.push_back(check("lemma3.1b: p~'_c >= p'_H iff mH^2-(2m+5)H+3m+3 >= 0", (ptc >= pH) == (q >= 0),
                            "polynomial = " + q.str()));
    }
    if (H >= 3) {
        bool eq = H == 3 && m == 2;
        out.push_back(check("cor3.2c: theta_c < 1/3 unless H = 3, m = 2", eq ? thc <= Rational(1, 3) : thc < Rational(1, 3),
                            "theta_c = " + thc.str()));
    }
    if (hr + 1 <= B) {
        bool eq = B == H && H == hr + 1 && hr + 1 == r.d + 1;
        out.push_back(check("cor3.2b: theta_c < theta~_c unless B = H = h^r+1 = d+1",
                            eq ? thc == thtc : thc < thtc, "theta_c = " + thc.str() + ", theta~_c = " + thtc.str()));
        out.push_back(check("theta_c <= theta~_B", thc <= theta_tilde_B(m, B), "theta~_B = " + theta_tilde_B(m, B).str()));
    }
    if (m == 2 && (*r.B == 4 || *r.B == 5)) {
        Rational lhs = Rational(-1, 3) - 1 / B + Rational(7) / (2 * H + 3);
        out.push_back(check("lemma6.1: -1/3 - 1/B + 7/(2H+3) < 0 iff H > 21B/(2(B+3)) - 3/2",
                            (lhs < 0) == (H > H_threshold(B)), "lhs = " + lhs.str() + ", threshold = " + H_threshold(B).str()));
    }
    Rational c1 = -1 / B - Rational(1, 2) + Rational(5, 2) * theta_B(B);
    out.push_back(check("case1: -1/B - 1/2 + 5/2 theta_B = (1/B - 1/3)/4", c1 == (1 / B - Rational(1, 3)) / 4, c1.str()));
    return out;
}

std::vector<NamedCheck> exponent_identities() {
    std::vector<NamedCheck> out;
    out.push_back(check("p~'_c(2,3) = p'_H(3) = 6", p_tilde_c_prime(2, 3) == 6 && p_H_prime(3) == 6,
                        p_tilde_c_prime(2, 3).str() + ", " + p_H_prime(3).str()));
    out.push_back(check("M(3,4) = 0", M_poly(3, 4) == 0, M_poly(3, 4).str()));
    out.push_back(check("M(2,6) = 9", M_poly(2, 6) == 9, M_poly(2, 6).str()));
    out.push_back(check("H(4) = 9/2 = 21*4/14 - 3/2", H_of_B(4) == H_threshold(4) && H_of_B(4) == Rational(9, 2),
                        H_threshold(4).str()));
    out.push_back(check("H(5) = 81/16 = 21*5/16 - 3/2", H_of_B(5) == H_threshold(5), H_threshold(5).str()));
    out.push_back(check("p0(5/3, 5/6) = 6/5", bak_seeger_p0(Rational(5, 3), Rational(5, 6)) == Rational(6, 5),
                        bak_seeger_p0(Rational(5, 3), Rational(5, 6)).str()));
    bool case1 = true;
    for (long long b = 2; b <= 12; ++b) {
        Rational B(b);
        case1 = case1 && (-1 / B - Rational(1, 2) + Rational(5, 2) * theta_B(B) - (1 / B - Rational(1, 3)) / 4 == 0);
    }
    out.push_back(check("case1 identity for B = 2..12", case1, ""));
    bool equiv = true;
    for (long long m = 2; m <= 6; ++m)
        for (long long h4 = 8; h4 <= 48; ++h4) {
            Rational M(m), H(h4, 4);
            Rational q = M * H * H - (2 * M + 5) * H + 3 * M + 3;
            equiv = equiv && ((p_tilde_c_prime(M, H) >= p_H_prime(H)) == (q >= 0));
        }
    out.push_back(check("p~'_c >= p'_H iff mH^2-(2m+5)H+3m+3 >= 0 on m = 2..6, H = 2..12 step 1/4", equiv, ""));
    bool hgb = true;
    for (long long b : {4LL, 5LL})
        for (long long h16 = 32; h16 <= 160; ++h16) {
            Rational B(b), H(h16, 16);
            Rational lhs = Rational(-1, 3) - 1 / B + Rational(7) / (2 * H + 3);
            hgb = hgb && ((lhs < 0) == (H > H_of_B(b)));
        }
    out.push_back(check("-1/3 - 1/B + 7/(2H+3) < 0 iff H > H(B), B = 4, 5, H = 2..10 step 1/16", hgb, ""));
    return out;
}

double DeltaVector::value(std::size_t slot) const { return std::exp2(-static_cast<double>(k) * q.at(slot).to_double()); }
double DeltaVector::value30() const { return std::exp2(-static_cast<double>(k) * q30.to_double()); }

DeltaVector delta_vector(const RestrictionReport& r, long long k, const DeltaOptions& opt) {
    if (!r.kappa_tilde || !r.B) throw std::invalid_argument("delta_vector: report lacks kappa~ or B");
    if (k < 1) throw std::invalid_argument("delta_vector: k >= 1 required");
    const Weight& kt = *r.kappa_tilde;
    long long B = *r.B;
    if (static_cast<long long>(opt.n_list.size()) != std::max(B - 2, 0LL))
        throw std::invalid_argument("delta_vector: need n_j for j = 1..B-2");
    DeltaVector dv{k, B, {}, 0, r.nd_or_d};
    dv.q.push_back(kt.k2 - 2 * kt.k1);
    dv.q.push_back(kt.k1);
    dv.q.push_back(kt.k2);
    for (long long j = 1; j <= B - 2; ++j) {
        const auto& nj = opt.n_list[static_cast<std::size_t>(j - 1)];
        dv.q.push_back(nj ? Rational(*nj) * kt.k1 + Rational(j) * kt.k2 - 1 : opt.flat_exponent);
    }
    for (std::size_t s = 0; s < dv.q.size(); ++s)
        if (dv.q[s] <= 0)
            throw std::domain_error("delta_vector: exponent of delta_" + std::to_string(s) + " is " + dv.q[s].str() +
                                    " <= 0, input outside the admissible family");
    if (dv.branch == Branch::D)
        dv.q30 = dv.q[0] + Rational(opt.taylor_order_N) * dv.q[1];
    else
        dv.q30 = B >= 3 ? min(dv.q[0], dv.q[3]) : dv.q[0];
    return dv;
}

RhoCoefficients rho_coefficients(const DeltaVector& dv) {
    RhoCoefficients c{dv.B, dv.value30(), {}, dv.value(0)};
    for (long long j = 2; j <= dv.B - 2; ++j) c.rest.push_back(dv.value(static_cast<std::size_t>(j + 2)));
    return c;
}

RhoValue rho(const RhoCoefficients& c, Branch branch) {
    if (c.B < 3) throw std::invalid_argument("rho: B >= 3 required");
    double B = static_cast<double>(c.B);
    double v = std::pow(std::abs(c.d30), B / (B - 1));
    for (std::size_t i = 0; i < c.rest.size(); ++i) {
        double j = static_cast<double>(i + 2);
        v += std::pow(std::abs(c.rest[i]), B / (B - j));
    }
    if (branch == Branch::D) v += std::pow(std::abs(c.d0), 3 * B / (2 * B - 3));
    return {v, branch};
}

RhoCoefficients duistermaat_scale(const RhoCoefficients& c, double r, Branch branch) {
    if (!(r > 0)) throw std::invalid_argument("duistermaat_scale: r > 0 required");
    double B = static_cast<double>(c.B);
    double lr = std::log2(r);
    RhoCoefficients s = c;
    s.d30 = c.d30 * std::exp2(lr * (B - 1) / B);
    for (std::size_t i = 0; i < c.rest.size(); ++i) {
        double j = static_cast<double>(i + 2);
        s.rest[i] = c.rest[i] * std::exp2(lr * (B - j) / B);
    }
    if (branch == Branch::D) s.d0 = c.d0 * std::exp2(lr * (2 * B - 3) / (3 * B));
    return s;
}

std::optional<Rational> rho_exact(const RhoCoefficientsExact& c, Branch branch) {
    if (c.B < 3) throw std::invalid_argument("rho: B >= 3 required");
    Rational B(c.B);
    auto term = [](const Rational& x, const Rational& e) { return x.abs().exact_pow(e); };
    auto v = term(c.d30, B / (B - 1));
    if (!v) return std::nullopt;
    Rational sum = *v;
    for (std::size_t i = 0; i < c.rest.size(); ++i) {
        auto t = term(c.rest[i], B / (B - Rational(static_cast<long long>(i + 2))));
        if (!t) return std::nullopt;
        sum += *t;
    }
    if (branch == Branch::D) {
        auto t = term(c.d0, 3 * B / (2 * B - 3));
        if (!t) return std::nullopt;
        sum += *t;
    }
    return sum;
}

std::optional<RhoCoefficientsExact> duistermaat_scale_exact(const RhoCoefficientsExact& c, const Rational& r,
                                                            Branch branch) {
    if (r <= 0) throw std::invalid_argument("duistermaat_scale: r > 0 required");
    Rational B(c.B);
    RhoCoefficientsExact s = c;
    auto f = r.exact_pow((B - 1) / B);
    if (!f) return std::nullopt;
    s.d30 = c.d30 * *f;
    for (std::size_t i = 0; i < c.rest.size(); ++i) {
        auto g = r.exact_pow((B - Rational(static_cast<long long>(i + 2))) / B);
        if (!g) return std::nullopt;
        s.rest[i] = c.rest[i] * *g;
    }
    if (branch == Branch::D) {
        auto g = r.exact_pow((2 * B - 3) / (3 * B));
        if (!g) return std::nullopt;
        s.d0 = c.d0 * *g;
    }
    return s;
}

}  // namespace sr
