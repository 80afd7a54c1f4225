#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pwlent {

using BigInt = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact rational, always canonical (reduced, positive denominator).
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : q_(v) {}
    BigRational(int v) : q_(v) {}
    BigRational(const BigInt& v) : q_(v) {}
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n", "n/d", "-n/d", "12.5", "-0.815", "1e-3", "2.5E4".
    static BigRational parse(std::string_view s);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // "num/den" always, e.g. "5/1", "-888/1087".
    std::string str() const;
    // "5", "-888/1087".
    std::string short_str() const;
    // Decimal truncated toward zero with `places` digits after the point.
    std::string decimal(unsigned places) const;
    double to_double() const { return q_.get_d(); }

    BigRational abs() const;
    BigRational inverse() const;
    BigInt floor() const;
    BigRational pow(long e) const;

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

inline BigRational min(const BigRational& a, const BigRational& b) { return b < a ? b : a; }
inline BigRational max(const BigRational& a, const BigRational& b) { return a < b ? b : a; }

// Longest common prefix of the truncated decimal expansions of lo and hi.
// Every real in [lo,hi] shares it.
std::string common_decimal_prefix(const BigRational& lo, const BigRational& hi, unsigned max_places);

}  // namespace pwlent

template <>
struct std::hash<pwlent::BigRational> {
    std::size_t operator()(const pwlent::BigRational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
