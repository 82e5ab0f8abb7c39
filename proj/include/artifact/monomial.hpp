#ifndef ARTIFACT_MONOMIAL_HPP
#define ARTIFACT_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace artifact {

// Variable universes. Each polynomial type is tied to exactly one universe, so
// polynomials in (A,B,A',B') can never be silently mixed with polynomials in
// x2,x3,x5,x6 or sigma,pi: moving between universes goes through substitute().
// `weights` gives the grading used by the monomial order and by degree().
struct VarsABAB {
    static constexpr int nvars = 4;
    static constexpr std::array<const char*, 4> names{"A", "B", "Ap", "Bp"};
    static constexpr std::array<int, 4> weights{1, 1, 1, 1};
};

// Polynomial ring Q[x2,x3,x5,x6] with deg xk = k.
struct VarsX {
    static constexpr int nvars = 4;
    static constexpr std::array<const char*, 4> names{"x2", "x3", "x5", "x6"};
    static constexpr std::array<int, 4> weights{2, 3, 5, 6};
};

// Q[sigma, pi] with deg sigma = 2, deg pi = 6.
struct VarsSigmaPi {
    static constexpr int nvars = 2;
    static constexpr std::array<const char*, 2> names{"sigma", "pi"};
    static constexpr std::array<int, 2> weights{2, 6};
};

// Q[sigma, p] with deg sigma = deg p = 2.
struct VarsSigmaP {
    static constexpr int nvars = 2;
    static constexpr std::array<const char*, 2> names{"sigma", "p"};
    static constexpr std::array<int, 2> weights{2, 2};
};

// Single variable X of period polynomials.
struct VarsPeriod {
    static constexpr int nvars = 1;
    static constexpr std::array<const char*, 1> names{"X"};
    static constexpr std::array<int, 1> weights{1};
};

// A monomial packed into 64 bits: a 16-bit weighted degree on top, then one
// 12-bit exponent field per variable with variable 0 in the lowest field.
// Comparing packed keys as integers is the graded-lex order in which
// variable 0 < variable 1 < ... : first by weighted degree, then by the
// exponent of the last variable, then the one before, and so on.
// Multiplication of monomials is addition of keys.
template <class U>
class Monomial {
public:
    static constexpr int kBits = 12;
    static constexpr uint64_t kMask = (uint64_t{1} << kBits) - 1;
    static constexpr int kDegShift = 48;
    static constexpr int kMaxExponent = static_cast<int>(kMask);

    constexpr Monomial() = default;
    explicit constexpr Monomial(uint64_t key) : key_(key) {}

    static Monomial from_exponents(const std::array<int, U::nvars>& e)
    {
        uint64_t key = 0;
        uint64_t deg = 0;
        for (int i = 0; i < U::nvars; ++i) {
            if (e[i] < 0 || e[i] > kMaxExponent) throw std::out_of_range("Monomial: exponent out of range");
            key |= static_cast<uint64_t>(e[i]) << (kBits * i);
            deg += static_cast<uint64_t>(e[i]) * U::weights[i];
        }
        if (deg >= (uint64_t{1} << 16)) throw std::out_of_range("Monomial: degree out of range");
        return Monomial(key | (deg << kDegShift));
    }

    static Monomial var(int i, int power = 1)
    {
        std::array<int, U::nvars> e{};
        e[i] = power;
        return from_exponents(e);
    }

    uint64_t key() const { return key_; }
    int exponent(int i) const { return static_cast<int>((key_ >> (kBits * i)) & kMask); }
    int degree() const { return static_cast<int>(key_ >> kDegShift); }
    int total_exponent() const
    {
        int s = 0;
        for (int i = 0; i < U::nvars; ++i) s += exponent(i);
        return s;
    }
    std::array<int, U::nvars> exponents() const
    {
        std::array<int, U::nvars> e{};
        for (int i = 0; i < U::nvars; ++i) e[i] = exponent(i);
        return e;
    }

    bool divides(Monomial o) const
    {
        for (int i = 0; i < U::nvars; ++i)
            if (exponent(i) > o.exponent(i)) return false;
        return true;
    }

    friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
    // Only valid when b divides a.
    friend Monomial operator/(Monomial a, Monomial b) { return Monomial(a.key_ - b.key_); }
    friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
    friend bool operator!=(Monomial a, Monomial b) { return a.key_ != b.key_; }
    friend bool operator<(Monomial a, Monomial b) { return a.key_ < b.key_; }

    std::string str() const
    {
        std::string s;
        for (int i = 0; i < U::nvars; ++i) {
            int e = exponent(i);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += U::names[i];
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

private:
    uint64_t key_ = 0;
};

} // namespace artifact

#endif
