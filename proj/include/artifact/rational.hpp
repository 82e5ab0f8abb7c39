#ifndef ARTIFACT_RATIONAL_HPP
#define ARTIFACT_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace artifact {

// Exact rational number. Values whose reduced numerator and denominator fit
// in int64 are stored inline; anything larger lives in a GMP mpq. Every
// operation returns a canonical value: gcd(|num|, den) = 1, den > 0, and a
// value is kept in the small representation whenever it fits.
class Rational {
public:
    Rational() noexcept : n_(0), d_(1) {}
    Rational(int v) noexcept : n_(v), d_(1) {}
    Rational(long v) noexcept : n_(v), d_(1) {}
    Rational(long long v) noexcept : n_(v), d_(1) {}
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_)
    {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o)
    {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
            else big_.reset();
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    // Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view s);

    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    bool is_small() const noexcept { return !big_; }
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;      // "p/q", always with the denominator
    std::string pretty() const;   // "p" when q = 1, else "p/q"

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    // this += a * b, the inner step of every elimination loop.
    void add_mul(const Rational& a, const Rational& b);
    void sub_mul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

    std::size_t hash() const;

private:
    void set_from_mpq(mpq_class&& q);
    void set_from_i128(__int128 num, __int128 den);

    int64_t n_;
    int64_t d_;
    std::unique_ptr<mpq_class> big_;
};

Rational pow(const Rational& base, unsigned exp);

} // namespace artifact

#endif
