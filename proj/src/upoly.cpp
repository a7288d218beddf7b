#include "sr/upoly.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>

namespace sr {

namespace {
using HiFloat = boost::multiprecision::cpp_bin_float_100;

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

int sign_at_infinity(const UPoly& p, bool positive) {
    int s = p.lead().sign();
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Yun: p = prod f_i^i with f_i squarefree and pairwise coprime. Returns (i, f_i).
std::vector<std::pair<int, UPoly>> squarefree_factors(const UPoly& p) {
    std::vector<std::pair<int, UPoly>> out;
    UPoly dp = p.derivative();
    UPoly a = UPoly::gcd(p, dp);
    UPoly b = UPoly::divmod(p, a).first;
    UPoly c = UPoly::divmod(dp, a).first;
    UPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly g = UPoly::gcd(b, d);
        if (g.degree() > 0) out.emplace_back(i, g);
        b = UPoly::divmod(b, g).first;
        c = UPoly::divmod(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

std::vector<double> real_root_estimates(const UPoly& f) {
    int n = f.degree();
    std::vector<double> out;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back((-f.coeffs()[0] / f.coeffs()[1]).to_double());
        return out;
    }
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    Rational lead = f.lead();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -(f.coeffs()[i] / lead).to_double();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = es.eigenvalues()[i];
        if (std::abs(z.imag()) <= 1e-6 * (1.0 + std::abs(z.real()))) out.push_back(z.real());
    }
    return out;
}

// Refine a simple root in 100-digit floating point, then recover p/q through
// continued-fraction convergents with q bounded by the leading coefficient.
std::optional<Rational> reconstruct_root(const UPoly& f, double guess) {
    // Primitive integer form to bound denominators.
    BigInt den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    std::vector<BigInt> ic;
    for (const auto& c : f.coeffs()) ic.push_back(c.num() * (den_lcm / c.den()));
    BigInt lc = boost::multiprecision::abs(ic.back());

    auto eval = [&](const HiFloat& y, HiFloat& fv, HiFloat& dv) {
        fv = 0;
        dv = 0;
        for (std::size_t i = ic.size(); i-- > 0;) {
            dv = dv * y + fv;
            fv = fv * y + HiFloat(ic[i]);
        }
    };
    HiFloat y = guess;
    for (int it = 0; it < 200; ++it) {
        HiFloat fv, dv;
        eval(y, fv, dv);
        if (dv == 0) break;
        HiFloat step = fv / dv;
        y -= step;
        if (abs(step) <= abs(y) * HiFloat("1e-90") + HiFloat("1e-95")) break;
    }
    // Continued fraction expansion of y.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    HiFloat x = y;
    for (int it = 0; it < 400; ++it) {
        HiFloat fl = floor(x);
        BigInt a = fl.convert_to<BigInt>();
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > lc) break;
        Rational cand(p2, q2);
        if (f(cand).is_zero()) return cand;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        HiFloat frac = x - fl;
        if (frac < HiFloat("1e-80")) break;
        x = 1 / frac;
    }
    return std::nullopt;
}
}  // namespace

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Rational UPoly::operator()(const Rational& y) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i];
    return acc;
}

double UPoly::eval(double y) const {
    double acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i].to_double();
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long long>(i)));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    std::vector<Rational> d = c_;
    Rational l = c_.back();
    for (auto& x : d) x /= l;
    return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UPoly{}, a};
    std::vector<Rational> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational f = rem[k] / b.c_.back();
        if (f.is_zero()) continue;
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<RationalRoot> rational_roots(const UPoly& p) {
    std::vector<RationalRoot> out;
    if (p.degree() <= 0) return out;
    for (const auto& [mult, f] : squarefree_factors(p)) {
        for (double guess : real_root_estimates(f)) {
            auto r = reconstruct_root(f, guess);
            if (!r) continue;
            bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const RationalRoot& x) { return x.value == *r; });
            if (!dup) out.push_back({*r, mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
    return out;
}

int count_real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
    if (p.degree() == 0) return 0;
    std::vector<UPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(UPoly{} - r);
    }
    std::vector<int> lo, hi;
    for (const auto& s : seq) {
        lo.push_back(sign_at_infinity(s, false));
        hi.push_back(sign_at_infinity(s, true));
    }
    return variations(lo) - variations(hi);
}

UPoly strip_rational_roots(const UPoly& p) {
    UPoly q = p;
    for (const auto& r : rational_roots(p)) {
        UPoly lin({-r.value, Rational(1)});
        for (int k = 0; k < r.multiplicity; ++k) q = UPoly::divmod(q, lin).first;
    }
    return q;
}

}  // namespace sr
