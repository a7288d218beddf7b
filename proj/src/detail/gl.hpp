#pragma once
// Gauss-Legendre rules on [-1,1] and pairwise summation.

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace sr::detail {

template <unsigned N>
struct GLRule {
    std::array<double, N> x{}, w{};
    GLRule() {
        using G = boost::math::quadrature::gauss<double, N>;
        const auto& a = G::abscissa();
        const auto& wt = G::weights();
        unsigned k = 0;
        for (unsigned i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) {
                x[k] = 0.0;
                w[k++] = wt[i];
                continue;
            }
            x[k] = -a[i];
            w[k++] = wt[i];
            x[k] = a[i];
            w[k++] = wt[i];
        }
    }
};

inline const GLRule<16>& gl16() {
    static const GLRule<16> r;
    return r;
}

template <class T>
T pairwise_sum(const T* v, std::size_t n) {
    if (n <= 8) {
        T s{};
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace sr::detail
