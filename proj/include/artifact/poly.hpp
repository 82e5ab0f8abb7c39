#ifndef ARTIFACT_POLY_HPP
#define ARTIFACT_POLY_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artifact/monomial.hpp"
#include "artifact/rational.hpp"

namespace artifact {

// Open-addressing accumulator from packed monomial keys to coefficients.
// Used by multiplication and substitution where many partial products hit
// the same monomial.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expected = 16);
    Rational& slot(uint64_t key);
    void add(uint64_t key, const Rational& c) { slot(key) += c; }
    void add_mul(uint64_t key, const Rational& a, const Rational& b) { slot(key).add_mul(a, b); }
    // Sorted, zero-free list of terms; leaves the accumulator empty.
    std::vector<std::pair<uint64_t, Rational>> take_sorted();

private:
    void grow();
    std::vector<uint64_t> keys_;
    std::vector<Rational> vals_;
    std::vector<unsigned char> used_;
    std::size_t count_ = 0;
    std::size_t mask_ = 0;
};

// Exact sparse polynomial over Q in the variables of universe U. Terms are
// kept sorted by the packed monomial order with no zero coefficients, so
// structural equality is polynomial equality.
template <class U>
class Poly {
public:
    using Mono = Monomial<U>;
    using Term = std::pair<uint64_t, Rational>;

    Poly() = default;
    Poly(const Rational& c)
    {
        if (!c.is_zero()) terms_.emplace_back(0, c);
    }
    Poly(int c) : Poly(Rational(c)) {}
    Poly(Mono m, const Rational& c)
    {
        if (!c.is_zero()) terms_.emplace_back(m.key(), c);
    }

    static Poly var(int i, int power = 1) { return Poly(Mono::var(i, power), Rational(1)); }
    static Poly monomial(const std::array<int, U::nvars>& e, const Rational& c = Rational(1))
    {
        return Poly(Mono::from_exponents(e), c);
    }
    // Builds from unsorted terms, combining duplicates.
    static Poly from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        Poly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().first == t.first) p.terms_.back().second += t.second;
            else p.terms_.push_back(std::move(t));
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        }
        return p;
    }
    static Poly from_sorted_unchecked(std::vector<Term> terms)
    {
        Poly p;
        p.terms_ = std::move(terms);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    Rational constant_term() const
    {
        return (!terms_.empty() && terms_[0].first == 0) ? terms_[0].second : Rational(0);
    }

    Rational coefficient(Mono m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m.key(),
                                   [](const Term& t, uint64_t k) { return t.first < k; });
        return (it != terms_.end() && it->first == m.key()) ? it->second : Rational(0);
    }
    Rational coefficient(const std::array<int, U::nvars>& e) const { return coefficient(Mono::from_exponents(e)); }

    Mono leading_monomial() const { return Mono(terms_.back().first); }
    const Rational& leading_coefficient() const { return terms_.back().second; }

    // Maximum weighted degree (the grading of U); -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : Mono(terms_.back().first).degree(); }
    int low_degree() const { return terms_.empty() ? -1 : Mono(terms_.front().first).degree(); }
    bool is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }
    int degree_in(int var) const
    {
        int d = -1;
        for (auto& t : terms_) d = std::max(d, Mono(t.first).exponent(var));
        return d;
    }

    Poly homogeneous_part(int deg) const
    {
        return filter([deg](Mono m) { return m.degree() == deg; });
    }
    Poly filter(const std::function<bool(Mono)>& keep) const
    {
        Poly p;
        for (auto& t : terms_)
            if (keep(Mono(t.first))) p.terms_.push_back(t);
        return p;
    }
    // Sets variable `var` to zero.
    Poly at_zero(int var) const
    {
        return filter([var](Mono m) { return m.exponent(var) == 0; });
    }

    // Applies an exponent-level transformation such as a permutation of the
    // variables. The map must be injective on the support.
    Poly map_monomials(const std::function<Mono(Mono)>& f) const
    {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) out.emplace_back(f(Mono(t.first)).key(), t.second);
        return from_terms(std::move(out));
    }
    Poly permute_variables(const std::array<int, U::nvars>& target) const
    {
        return map_monomials([&target](Mono m) {
            std::array<int, U::nvars> e{};
            for (int i = 0; i < U::nvars; ++i) e[target[i]] = m.exponent(i);
            return Mono::from_exponents(e);
        });
    }

    Poly operator-() const
    {
        Poly p = *this;
        for (auto& t : p.terms_) t.second = -t.second;
        return p;
    }

    Poly& operator+=(const Poly& o) { return *this = combine(*this, o, Rational(1)); }
    Poly& operator-=(const Poly& o) { return *this = combine(*this, o, Rational(-1)); }
    Poly& operator*=(const Rational& c)
    {
        if (c.is_zero()) terms_.clear();
        else
            for (auto& t : terms_) t.second *= c;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, Rational(1)); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, Rational(-1)); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        const Poly& s = a.size() <= b.size() ? a : b;
        const Poly& l = a.size() <= b.size() ? b : a;
        if (s.size() == 1) {
            Poly r;
            r.terms_.reserve(l.size());
            for (auto& t : l.terms_) r.terms_.emplace_back(t.first + s.terms_[0].first, t.second * s.terms_[0].second);
            return r;
        }
        TermAccumulator acc(a.size() * b.size() < 4096 ? a.size() * b.size() : 4096);
        for (auto& x : s.terms_)
            for (auto& y : l.terms_) acc.add_mul(x.first + y.first, x.second, y.second);
        Poly r;
        r.terms_ = acc.take_sorted();
        return r;
    }
    Poly mul_monomial(Mono m, const Rational& c = Rational(1)) const
    {
        Poly r;
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (auto& t : terms_) r.terms_.emplace_back(t.first + m.key(), t.second * c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Result of exact division: nullopt when `d` does not divide `*this`.
    // The quotient is always multiplied back before being returned.
    std::optional<Poly> exact_divide(const Poly& d) const
    {
        if (d.is_zero()) throw std::domain_error("exact_divide: division by zero");
        Poly rem = *this;
        std::vector<Term> q;
        const Mono lm = d.leading_monomial();
        const Rational lc_inv = d.leading_coefficient().inverse();
        while (!rem.is_zero()) {
            Mono m = rem.leading_monomial();
            if (!lm.divides(m)) return std::nullopt;
            Mono qm = m / lm;
            Rational qc = rem.leading_coefficient() * lc_inv;
            rem -= d.mul_monomial(qm, qc);
            q.emplace_back(qm.key(), std::move(qc));
        }
        Poly quotient = from_terms(std::move(q));
        if (quotient * d != *this) throw std::logic_error("exact_divide: multiply-back check failed");
        return quotient;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            bool neg = c.sign() < 0;
            if (neg) c = -c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            Mono m(it->first);
            if (m.key() == 0) s += c.pretty();
            else if (c.is_one()) s += m.str();
            else s += c.pretty() + "*" + m.str();
        }
        return s;
    }

private:
    static Poly combine(const Poly& a, const Poly& b, const Rational& sb)
    {
        Poly r;
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        const bool neg = sb.sign() < 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, neg ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                Rational c = a.terms_[i].second;
                if (neg) c -= b.terms_[j].second;
                else c += b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

template <class U>
Poly<U> pow(const Poly<U>& p, unsigned e)
{
    Poly<U> result(1);
    Poly<U> b = p;
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return result;
}

// Ring homomorphism Q[U] -> Q[V] sending variable i to images[i]. Powers of
// each image are computed once per call.
template <class U, class V>
Poly<V> substitute(const Poly<U>& p, const std::array<Poly<V>, U::nvars>& images)
{
    std::array<int, U::nvars> maxe{};
    for (auto& t : p.terms())
        for (int i = 0; i < U::nvars; ++i) maxe[i] = std::max(maxe[i], Monomial<U>(t.first).exponent(i));
    std::array<std::vector<Poly<V>>, U::nvars> powers;
    for (int i = 0; i < U::nvars; ++i) {
        powers[i].reserve(maxe[i] + 1);
        powers[i].emplace_back(1);
        for (int k = 1; k <= maxe[i]; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    Poly<V> result;
    for (auto& t : p.terms()) {
        Monomial<U> m(t.first);
        Poly<V> term(t.second);
        for (int i = 0; i < U::nvars; ++i)
            if (m.exponent(i) > 0) term *= powers[i][m.exponent(i)];
        result += term;
    }
    return result;
}

// Substitution where some variables have no image. Throws when a variable
// without an image occurs in p.
template <class U, class V>
Poly<V> substitute_partial(const Poly<U>& p, const std::array<std::optional<Poly<V>>, U::nvars>& images)
{
    std::array<Poly<V>, U::nvars> full;
    for (auto& t : p.terms())
        for (int i = 0; i < U::nvars; ++i)
            if (Monomial<U>(t.first).exponent(i) > 0 && !images[i])
                throw std::invalid_argument(std::string("substitute: no image for variable ") + U::names[i]);
    for (int i = 0; i < U::nvars; ++i)
        if (images[i]) full[i] = *images[i];
    return substitute(p, full);
}

using PolyABAB = Poly<VarsABAB>;
using PolyX = Poly<VarsX>;
using PolySigmaPi = Poly<VarsSigmaPi>;
using PolySigmaP = Poly<VarsSigmaP>;
using PolyPeriod = Poly<VarsPeriod>;

} // namespace artifact

#endif
