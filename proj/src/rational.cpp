#include "artifact/rational.hpp"

#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace artifact {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

inline bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

inline uint64_t gcd64(uint64_t a, uint64_t b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

inline u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v)
{
    u128 a = uabs(v);
    uint64_t limbs[2] = {static_cast<uint64_t>(a), static_cast<uint64_t>(a >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
    if (v < 0) z = -z;
    return z;
}

mpz_class mpz_from_i64(int64_t v)
{
    return mpz_from_i128(static_cast<i128>(v));
}

} // namespace

Rational::Rational(long long num, long long den) : n_(0), d_(1)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_from_i128(num, den);
}

Rational::Rational(const mpq_class& q) : n_(0), d_(1)
{
    mpq_class c(q);
    c.canonicalize();
    set_from_mpq(std::move(c));
}

Rational::Rational(const mpz_class& z) : n_(0), d_(1)
{
    set_from_mpq(mpq_class(z));
}

void Rational::set_from_i128(i128 num, i128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        n_ = 0;
        d_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g != 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits(num) && fits(den)) {
        n_ = static_cast<int64_t>(num);
        d_ = static_cast<int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_from_mpq(mpq_class&& q)
{
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t())) {
        long nn = num.get_si();
        long dd = den.get_si();
        if (nn != std::numeric_limits<long>::min()) {
            n_ = nn;
            d_ = dd;
            big_.reset();
            return;
        }
    }
    if (big_) *big_ = std::move(q);
    else big_ = std::make_unique<mpq_class>(std::move(q));
}

Rational Rational::parse(std::string_view s)
{
    std::string str(s);
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + str + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const
{
    return big_ ? big_->get_den() == 1 : d_ == 1;
}

int Rational::sign() const
{
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(n_), mpz_from_i64(d_));
}

mpz_class Rational::numerator() const
{
    return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(n_);
}

mpz_class Rational::denominator() const
{
    return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(d_);
}

std::string Rational::str() const
{
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(n_) + "/" + std::to_string(d_);
}

std::string Rational::pretty() const
{
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const
{
    Rational r;
    if (big_) r.set_from_mpq(-*big_);
    else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    if (big_) r.set_from_mpq(1 / *big_);
    else r.set_from_i128(d_, n_);
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(n_, o.n_, &s) && s != std::numeric_limits<int64_t>::min()) {
                n_ = s;
                return *this;
            }
            set_from_i128(static_cast<i128>(n_) + o.n_, 1);
            return *this;
        }
        i128 num = static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_;
        i128 den = static_cast<i128>(d_) * o.d_;
        set_from_i128(num, den);
        return *this;
    }
    set_from_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t s;
            if (!__builtin_sub_overflow(n_, o.n_, &s) && s != std::numeric_limits<int64_t>::min()) {
                n_ = s;
                return *this;
            }
            set_from_i128(static_cast<i128>(n_) - o.n_, 1);
            return *this;
        }
        i128 num = static_cast<i128>(n_) * o.d_ - static_cast<i128>(o.n_) * d_;
        i128 den = static_cast<i128>(d_) * o.d_;
        set_from_i128(num, den);
        return *this;
    }
    set_from_mpq(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            int64_t p;
            if (!__builtin_mul_overflow(n_, o.n_, &p) && p != std::numeric_limits<int64_t>::min()) {
                n_ = p;
                return *this;
            }
            set_from_i128(static_cast<i128>(n_) * o.n_, 1);
            return *this;
        }
        set_from_i128(static_cast<i128>(n_) * o.n_, static_cast<i128>(d_) * o.d_);
        return *this;
    }
    set_from_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        set_from_i128(static_cast<i128>(n_) * o.d_, static_cast<i128>(d_) * o.n_);
        return *this;
    }
    set_from_mpq(to_mpq() / o.to_mpq());
    return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b)
{
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_add_overflow(n_, p, &s) &&
            s != std::numeric_limits<int64_t>::min()) {
            n_ = s;
            return;
        }
    }
    *this += a * b;
}

void Rational::sub_mul(const Rational& a, const Rational& b)
{
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.n_, b.n_, &p) && !__builtin_sub_overflow(n_, p, &s) &&
            s != std::numeric_limits<int64_t>::min()) {
            n_ = s;
            return;
        }
    }
    *this -= a * b;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical forms: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.pretty();
}

std::size_t Rational::hash() const
{
    if (big_) return std::hash<std::string>()(str());
    return std::hash<int64_t>()(n_) * 1000003u ^ std::hash<int64_t>()(d_);
}

Rational pow(const Rational& base, unsigned exp)
{
    Rational result(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return result;
}

} // namespace artifact
