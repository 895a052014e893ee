#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace dp {

namespace mp = boost::multiprecision;

// Arbitrary-precision integer usable as an Eigen scalar.
class Integer {
public:
    Integer() = default;
    Integer(long long x) : v_(x) {}
    Integer(int x) : v_(x) {}
    Integer(long x) : v_(x) {}
    explicit Integer(const mp::cpp_int &x) : v_(x) {}
    explicit Integer(const std::string &s) : v_(s) {}

    const mp::cpp_int &raw() const { return v_; }

    Integer operator-() const { return Integer(mp::cpp_int(-v_)); }
    Integer &operator+=(const Integer &o) { v_ += o.v_; return *this; }
    Integer &operator-=(const Integer &o) { v_ -= o.v_; return *this; }
    Integer &operator*=(const Integer &o) { v_ *= o.v_; return *this; }
    // truncating division, as for builtin integers
    Integer &operator/=(const Integer &o) { v_ /= o.v_; return *this; }
    Integer &operator%=(const Integer &o) { v_ %= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer &b) { return a += b; }
    friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer &b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer &b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer &b) { return a %= b; }

    friend bool operator==(const Integer &a, const Integer &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer &a, const Integer &b) {
        int c = a.v_.compare(b.v_);
        return c <=> 0;
    }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    long long to_ll() const { return v_.convert_to<long long>(); }
    bool fits_ll() const {
        return v_ >= mp::cpp_int(INT64_MIN) && v_ <= mp::cpp_int(INT64_MAX);
    }
    std::string str() const { return v_.str(); }

    friend std::ostream &operator<<(std::ostream &os, const Integer &a) { return os << a.v_; }

private:
    mp::cpp_int v_;
};

inline Integer abs(const Integer &a) { return a.sign() < 0 ? -a : a; }
inline Integer gcd(const Integer &a, const Integer &b) { return Integer(mp::cpp_int(mp::gcd(a.raw(), b.raw()))); }
inline Integer lcm(const Integer &a, const Integer &b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(a / gcd(a, b) * b);
}
// floor division and nonnegative remainder
inline Integer floor_div(const Integer &a, const Integer &b) {
    Integer q = a / b;
    if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
    return q;
}
inline Integer mod(const Integer &a, const Integer &m) {
    Integer r = a % m;
    if (r.sign() < 0) r += abs(m);
    return r;
}
// floor of the square root of a nonnegative integer
inline Integer isqrt(const Integer &a) { return Integer(mp::cpp_int(mp::sqrt(a.raw()))); }
inline bool is_square(const Integer &a) {
    if (a.sign() < 0) return false;
    Integer r = isqrt(a);
    return r * r == a;
}

class Rational {
public:
    Rational() = default;
    Rational(long long x) : v_(x) {}
    Rational(int x) : v_(x) {}
    Rational(const Integer &x) : v_(x.raw()) {}
    Rational(const Integer &n, const Integer &d) : v_(n.raw(), d.raw()) {}
    explicit Rational(const mp::cpp_rational &x) : v_(x) {}

    Integer num() const { return Integer(mp::cpp_int(mp::numerator(v_))); }
    Integer den() const { return Integer(mp::cpp_int(mp::denominator(v_))); }

    Rational operator-() const { return Rational(mp::cpp_rational(-v_)); }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = a.v_.compare(b.v_);
        return c <=> 0;
    }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return mp::denominator(v_) == 1; }
    std::string str() const { return v_.str(); }

    friend std::ostream &operator<<(std::ostream &os, const Rational &a) { return os << a.v_; }

private:
    mp::cpp_rational v_;
};

inline Rational abs(const Rational &a) { return a.sign() < 0 ? -a : a; }

} // namespace dp

namespace Eigen {

template <> struct NumTraits<dp::Integer> : GenericNumTraits<dp::Integer> {
    typedef dp::Integer Real;
    typedef dp::Rational NonInteger;
    typedef dp::Integer Literal;
    typedef dp::Integer Nested;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static inline int digits10() { return 0; }
    static inline dp::Integer epsilon() { return 0; }
    static inline dp::Integer dummy_precision() { return 0; }
};

template <> struct NumTraits<dp::Rational> : GenericNumTraits<dp::Rational> {
    typedef dp::Rational Real;
    typedef dp::Rational NonInteger;
    typedef dp::Rational Literal;
    typedef dp::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };
    static inline int digits10() { return 0; }
    static inline dp::Rational epsilon() { return 0; }
    static inline dp::Rational dummy_precision() { return 0; }
};

} // namespace Eigen
