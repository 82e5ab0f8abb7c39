#ifndef ARTIFACT_SERIES_HPP
#define ARTIFACT_SERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artifact/poly.hpp"
#include "artifact/rational.hpp"

namespace artifact {

inline std::optional<Rational> as_constant(const Rational& c) { return c; }

template <class U>
std::optional<Rational> as_constant(const Poly<U>& p)
{
    if (!p.is_constant()) return std::nullopt;
    return p.constant_term();
}

inline bool is_zero_coeff(const Rational& c) { return c.is_zero(); }
template <class U>
bool is_zero_coeff(const Poly<U>& p) { return p.is_zero(); }

// Truncated power series in one variable t: coefficients of t^0..t^order.
template <class C>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(order + 1, C(0)) {}
    TruncSeries(int order, std::vector<C> coeffs) : c_(std::move(coeffs))
    {
        c_.resize(order + 1, C(0));
    }
    // The monomial c * t^k truncated at `order`.
    static TruncSeries monomial(int order, int k, const C& c)
    {
        TruncSeries s(order);
        if (k <= order) s.c_[k] = c;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_.at(i); }
    C& operator[](int i) { return c_.at(i); }
    const std::vector<C>& coefficients() const { return c_; }

    TruncSeries& operator+=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        a.check(b);
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                if (!is_zero_coeff(b.c_[j])) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncSeries operator*(TruncSeries a, const Rational& k)
    {
        for (auto& c : a.c_) c *= k;
        return a;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    // Multiplicative inverse; the constant term must be a nonzero rational.
    TruncSeries invert() const
    {
        auto c0 = as_constant(c_[0]);
        if (!c0 || c0->is_zero()) throw std::domain_error("TruncSeries::invert: constant term not invertible");
        Rational inv0 = c0->inverse();
        TruncSeries g(order());
        g.c_[0] = C(inv0);
        for (int n = 1; n <= order(); ++n) {
            C acc(0);
            for (int k = 1; k <= n; ++k)
                if (!is_zero_coeff(c_[k])) acc += c_[k] * g.c_[n - k];
            g.c_[n] = acc * (-inv0);
        }
        return g;
    }

    // t d/dt.
    TruncSeries t_log_derivative() const
    {
        TruncSeries r = *this;
        for (int i = 0; i <= order(); ++i) r.c_[i] = r.c_[i] * Rational(i);
        return r;
    }

private:
    void check(const TruncSeries& o) const
    {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("TruncSeries: order mismatch");
    }
    std::vector<C> c_;
};

// Truncated bivariate series in t,u: coefficients of t^i u^j with i + j <= order.
template <class C>
class TruncSeries2 {
public:
    TruncSeries2() = default;
    explicit TruncSeries2(int order) : order_(order) {}

    static TruncSeries2 monomial(int order, int i, int j, const C& c)
    {
        TruncSeries2 s(order);
        if (i + j <= order && !is_zero_coeff(c)) s.c_[{i, j}] = c;
        return s;
    }
    // f(t) as a bivariate series (u-degree 0), or f(u) when in_u is set.
    static TruncSeries2 from_univariate(const TruncSeries<C>& f, bool in_u, int order)
    {
        TruncSeries2 s(order);
        for (int k = 0; k <= std::min(order, f.order()); ++k) {
            if (is_zero_coeff(f[k])) continue;
            if (in_u) s.c_[{0, k}] = f[k];
            else s.c_[{k, 0}] = f[k];
        }
        return s;
    }

    int order() const { return order_; }
    C coefficient(int i, int j) const
    {
        auto it = c_.find({i, j});
        return it == c_.end() ? C(0) : it->second;
    }
    const std::map<std::pair<int, int>, C>& coefficients() const { return c_; }

    TruncSeries2& operator+=(const TruncSeries2& o)
    {
        check(o);
        for (auto& [k, v] : o.c_) add_at(k, v);
        return *this;
    }
    TruncSeries2& operator-=(const TruncSeries2& o)
    {
        check(o);
        for (auto& [k, v] : o.c_) add_at(k, -v);
        return *this;
    }
    friend TruncSeries2 operator+(TruncSeries2 a, const TruncSeries2& b) { return a += b; }
    friend TruncSeries2 operator-(TruncSeries2 a, const TruncSeries2& b) { return a -= b; }
    friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b)
    {
        a.check(b);
        TruncSeries2 r(a.order_);
        for (auto& [ka, va] : a.c_)
            for (auto& [kb, vb] : b.c_) {
                int i = ka.first + kb.first, j = ka.second + kb.second;
                if (i + j <= a.order_) r.add_at({i, j}, va * vb);
            }
        return r;
    }
    friend TruncSeries2 operator*(TruncSeries2 a, const Rational& k)
    {
        if (k.is_zero()) a.c_.clear();
        for (auto& kv : a.c_) kv.second *= k;
        return a;
    }
    friend bool operator==(const TruncSeries2& a, const TruncSeries2& b)
    {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    TruncSeries2 invert() const
    {
        auto c0 = as_constant(coefficient(0, 0));
        if (!c0 || c0->is_zero()) throw std::domain_error("TruncSeries2::invert: constant term not invertible");
        Rational inv0 = c0->inverse();
        TruncSeries2 g(order_);
        g.c_[{0, 0}] = C(inv0);
        for (int n = 1; n <= order_; ++n)
            for (int i = 0; i <= n; ++i) {
                int j = n - i;
                C acc(0);
                for (auto& [k, v] : c_) {
                    if (k.first == 0 && k.second == 0) continue;
                    if (k.first > i || k.second > j) continue;
                    auto it = g.c_.find({i - k.first, j - k.second});
                    if (it != g.c_.end()) acc += v * it->second;
                }
                C val = acc * (-inv0);
                if (!is_zero_coeff(val)) g.c_[{i, j}] = std::move(val);
            }
        return g;
    }

    // t d/dt.
    TruncSeries2 t_log_derivative() const
    {
        TruncSeries2 r(order_);
        for (auto& [k, v] : c_)
            if (k.first != 0) r.c_[k] = v * Rational(k.first);
        return r;
    }

private:
    void check(const TruncSeries2& o) const
    {
        if (o.order_ != order_) throw std::invalid_argument("TruncSeries2: order mismatch");
    }
    void add_at(std::pair<int, int> k, const C& v)
    {
        auto it = c_.find(k);
        if (it == c_.end()) {
            if (!is_zero_coeff(v)) c_.emplace(k, v);
            return;
        }
        it->second += v;
        if (is_zero_coeff(it->second)) c_.erase(it);
    }

    int order_ = 0;
    std::map<std::pair<int, int>, C> c_;
};

// Power series expansion of a rational function prod(num) / prod(1 - t^d)
// with rational coefficients: used for every closed-form Hilbert series.
std::vector<Rational> expand_hilbert(const std::vector<std::pair<int, int>>& numerator,
                                     const std::vector<int>& denominator_degrees, int order);

// Bivariate version: numerator terms c t^a u^b, denominator factors
// (1 - t^a u^b) given as (a, b) pairs. Entry [w][d] is the coefficient of t^w u^d.
std::vector<std::vector<Rational>> expand_hilbert2(const std::vector<std::tuple<int, int, int>>& numerator,
                                                   const std::vector<std::pair<int, int>>& denominator, int order_t,
                                                   int order_u);

} // namespace artifact

#endif
