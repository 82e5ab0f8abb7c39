#include "artifact/series.hpp"

#include <tuple>

namespace artifact {

std::vector<Rational> expand_hilbert(const std::vector<std::pair<int, int>>& numerator,
                                     const std::vector<int>& denominator_degrees, int order)
{
    std::vector<Rational> s(order + 1);
    for (auto [c, e] : numerator)
        if (e <= order) s[e] += Rational(c);
    // Dividing by (1 - t^d) is a running sum with stride d.
    for (int d : denominator_degrees)
        for (int n = d; n <= order; ++n) s[n] += s[n - d];
    return s;
}

std::vector<std::vector<Rational>> expand_hilbert2(const std::vector<std::tuple<int, int, int>>& numerator,
                                                   const std::vector<std::pair<int, int>>& denominator, int order_t,
                                                   int order_u)
{
    std::vector<std::vector<Rational>> s(order_t + 1, std::vector<Rational>(order_u + 1));
    for (auto [c, a, b] : numerator)
        if (a <= order_t && b <= order_u) s[a][b] += Rational(c);
    for (auto [a, b] : denominator)
        for (int n = 0; n <= order_t; ++n)
            for (int m = 0; m <= order_u; ++m)
                if ((a || b) && n >= a && m >= b) s[n][m] += s[n - a][m - b];
    return s;
}

} // namespace artifact
