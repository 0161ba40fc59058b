#ifndef LOCC_RATIONAL_HPP
#define LOCC_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace locc {

// Exact arithmetic failure: a 128-bit intermediate would have wrapped.
struct arithmetic_overflow : std::overflow_error {
    arithmetic_overflow() : std::overflow_error("exact arithmetic overflow (128-bit)") {}
};

struct dimension_error : std::invalid_argument {
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

using int128 = __int128;

int128 checked_add(int128 a, int128 b);
int128 checked_sub(int128 a, int128 b);
int128 checked_mul(int128 a, int128 b);
int128 gcd128(int128 a, int128 b);

std::string int128_to_string(int128 v);
int128 int128_from_string(const std::string& s);

// Reduced fraction over 128-bit integers. Denominator is always positive and
// gcd(|num|, den) == 1 after every operation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int128 n, int128 d);

    static Rational from_string(const std::string& s);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // "p" when integral, otherwise "p/q".
    std::string str() const;

private:
    void normalize();
    int128 num_;
    int128 den_;
};

}  // namespace locc

#endif
