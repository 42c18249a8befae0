#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace franel {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with denominator >= 1.
/// Zero is represented uniquely as 0/1.
class Rational {
public:
    Rational() : den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        normalize();
    }
    Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Greatest integer <= *this (floor semantics for negatives).
    Int floor() const {
        Int q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) {
            --q;
        }
        return q;
    }

    Rational abs() const {
        Rational r = *this;
        if (r.num_ < 0) {
            r.num_ = -r.num_;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1u) {
                r *= base;
            }
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const {
        if (den_ == 1) {
            return num_.str();
        }
        return num_.str() + "/" + den_.str();
    }

    /// Parses "n" or "n/d" (d > 0 after normalization; "n/1" accepted).
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_int(s), Int(1));
        }
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static Int parse_int(std::string_view s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            ++i;
        }
        if (i == s.size()) {
            throw std::invalid_argument("Rational: malformed integer literal");
        }
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                throw std::invalid_argument("Rational: malformed integer literal");
            }
        }
        return Int(std::string(s));
    }

    Int num_;
    Int den_;
};

/// GCD of a nonempty list of positive integers.
inline Int gcd_list(const std::vector<Int>& values) {
    if (values.empty()) {
        throw std::invalid_argument("gcd_list: empty list");
    }
    Int g = 0;
    for (const Int& v : values) {
        if (v < 1) {
            throw std::invalid_argument("gcd_list: entries must be positive");
        }
        g = boost::multiprecision::gcd(g, v);
    }
    return g;
}

/// LCM of a nonempty list of positive integers.
inline Int lcm_list(const std::vector<Int>& values) {
    if (values.empty()) {
        throw std::invalid_argument("lcm_list: empty list");
    }
    Int l = 1;
    for (const Int& v : values) {
        if (v < 1) {
            throw std::invalid_argument("lcm_list: entries must be positive");
        }
        l = boost::multiprecision::lcm(l, v);
    }
    return l;
}

inline Int gcd_list(const std::vector<long long>& values) {
    std::vector<Int> v(values.begin(), values.end());
    return gcd_list(v);
}

inline Int lcm_list(const std::vector<long long>& values) {
    std::vector<Int> v(values.begin(), values.end());
    return lcm_list(v);
}

inline Int rational_floor(const Rational& r) { return r.floor(); }

/// Nearest-double conversion that stays accurate for operands far outside
/// double range: scales num/den so the quotient carries ~63 significant bits,
/// then applies the binary exponent with ldexp.
inline double to_double(const Rational& r) {
    if (r.is_zero()) {
        return 0.0;
    }
    Int a = boost::multiprecision::abs(r.num());
    const Int& b = r.den();
    long shift = 63 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
    Int q = shift >= 0 ? Int((a << shift) / b) : Int(a / (b << (-shift)));
    double qd = q.convert_to<double>();
    double mag = std::ldexp(qd, static_cast<int>(-shift));
    return r.sign() < 0 ? -mag : mag;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1u) {
            r *= base;
        }
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace franel
