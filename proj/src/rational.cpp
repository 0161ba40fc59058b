#include "locc/rational.hpp"

#include <algorithm>

namespace locc {

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}

int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow();
    return r;
}

int128 gcd128(int128 a, int128 b) {
    unsigned __int128 x = a < 0 ? static_cast<unsigned __int128>(-(a + 1)) + 1 : static_cast<unsigned __int128>(a);
    unsigned __int128 y = b < 0 ? static_cast<unsigned __int128>(-(b + 1)) + 1 : static_cast<unsigned __int128>(b);
    while (y != 0) {
        unsigned __int128 t = x % y;
        x = y;
        y = t;
    }
    return static_cast<int128>(x);
}

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

int128 int128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    int128 v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
        v = checked_add(checked_mul(v, 10), s[i] - '0');
    }
    return neg ? -v : v;
}

Rational::Rational(int128 n, int128 d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    normalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(int128_from_string(s), 1);
    return Rational(int128_from_string(s.substr(0, slash)), int128_from_string(s.substr(slash + 1)));
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = checked_sub(0, num_);
        den_ = checked_sub(0, den_);
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_sub(0, num_);
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    int128 g = gcd128(den_, o.den_);
    int128 da = den_ / g;
    int128 db = o.den_ / g;
    int128 n = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
    int128 d = checked_mul(checked_mul(da, g), db);
    return Rational(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    int128 n = checked_mul(num_ / g1, o.num_ / g2);
    int128 d = checked_mul(den_ / g2, o.den_ / g1);
    return Rational(n, d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    // den > 0 on both sides.
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::string Rational::str() const {
    if (den_ == 1) return int128_to_string(num_);
    return int128_to_string(num_) + "/" + int128_to_string(den_);
}

}  // namespace locc
