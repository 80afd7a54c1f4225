#include "pwlent/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace pwlent {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_int(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw Error("malformed integer");
    BigInt v(std::string(s), 10);
    return neg ? BigInt(-v) : v;
}

BigInt pow10(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

BigRational BigRational::parse(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
        return v;
    };
    s = trim(s);
    if (s.empty()) throw Error("empty rational");
    try {
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            return BigRational(parse_int(trim(s.substr(0, slash))), parse_int(trim(s.substr(slash + 1))));
        }
        bool neg = false;
        std::string_view body = s;
        if (body[0] == '-' || body[0] == '+') {
            neg = body[0] == '-';
            body.remove_prefix(1);
        }
        long exp10 = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            BigInt ev = parse_int(body.substr(e + 1));
            if (!ev.fits_slong_p() || ::abs(ev) > 100000) throw Error("exponent out of range");
            exp10 = ev.get_si();
            body = body.substr(0, e);
        }
        std::string digits;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
            if (ip.empty() && fp.empty()) throw Error("malformed decimal");
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) throw Error("malformed decimal");
            digits = std::string(ip) + std::string(fp);
            exp10 -= static_cast<long>(fp.size());
        } else {
            if (!all_digits(body)) throw Error("malformed number");
            digits = std::string(body);
        }
        BigInt n(digits, 10);
        if (neg) n = -n;
        if (exp10 >= 0) return BigRational(BigInt(n * pow10(exp10)));
        return BigRational(n, pow10(static_cast<unsigned long>(-exp10)));
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational '" + std::string(s) + "'");
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " in '" + std::string(s) + "'");
    }
}

std::string BigRational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::short_str() const { return q_.get_str(); }

std::string BigRational::decimal(unsigned places) const {
    BigInt n = ::abs(q_.get_num());
    BigInt scaled = n * pow10(places);
    BigInt t;
    mpz_tdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());
    std::string ds = t.get_str();
    if (ds.size() <= places) ds.insert(0, places + 1 - ds.size(), '0');
    std::string out = sign() < 0 ? "-" : "";
    out += ds.substr(0, ds.size() - places);
    if (places > 0) out += "." + ds.substr(ds.size() - places);
    return out;
}

BigRational BigRational::abs() const { return sign() < 0 ? -*this : *this; }

BigRational BigRational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return BigRational(den(), num());
}

BigInt BigRational::floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.short_str(); }

std::string common_decimal_prefix(const BigRational& lo, const BigRational& hi, unsigned max_places) {
    std::string a = lo.decimal(max_places), b = hi.decimal(max_places);
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    if (k == a.size() && k == b.size()) return a;
    return a.substr(0, k);
}

}  // namespace pwlent
