#ifndef ARTIFACT_LINCOMB_HPP
#define ARTIFACT_LINCOMB_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "artifact/rational.hpp"

namespace artifact {

// Rational linear combination of basis keys, stored sorted by key with no
// zero coefficients. Tag distinguishes unrelated bases sharing a key type.
template <class Key, class Tag>
class LinComb {
public:
    using Term = std::pair<Key, Rational>;

    LinComb() = default;
    LinComb(const Key& k, const Rational& c)
    {
        if (!c.is_zero()) terms_.emplace_back(k, c);
    }

    static LinComb from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        LinComb r;
        for (auto& t : terms) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) r.terms_.back().second += t.second;
            else r.terms_.push_back(std::move(t));
            if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
        }
        return r;
    }
    static LinComb from_sorted_unchecked(std::vector<Term> terms)
    {
        LinComb r;
        r.terms_ = std::move(terms);
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Key& k) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const Key& key) { return t.first < key; });
        return (it != terms_.end() && it->first == k) ? it->second : Rational(0);
    }

    template <class Pred>
    LinComb filter(Pred keep) const
    {
        LinComb r;
        for (auto& t : terms_)
            if (keep(t.first)) r.terms_.push_back(t);
        return r;
    }

    LinComb operator-() const
    {
        LinComb r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    LinComb& operator+=(const LinComb& o) { return *this = combine(*this, o, false); }
    LinComb& operator-=(const LinComb& o) { return *this = combine(*this, o, true); }
    LinComb& operator*=(const Rational& c)
    {
        if (c.is_zero()) terms_.clear();
        else
            for (auto& t : terms_) t.second *= c;
        return *this;
    }
    friend LinComb operator+(const LinComb& a, const LinComb& b) { return combine(a, b, false); }
    friend LinComb operator-(const LinComb& a, const LinComb& b) { return combine(a, b, true); }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    static LinComb combine(const LinComb& a, const LinComb& b, bool negate_b)
    {
        LinComb r;
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a.terms_[i].first < b.terms_[j].first)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || b.terms_[j].first < a.terms_[i].first) {
                r.terms_.emplace_back(b.terms_[j].first, negate_b ? -b.terms_[j].second : b.terms_[j].second);
                ++j;
            } else {
                Rational c = a.terms_[i].second;
                if (negate_b) c -= b.terms_[j].second;
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

} // namespace artifact

#endif
