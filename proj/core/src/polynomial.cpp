#include "pwlent/polynomial.hpp"

#include <sstream>

namespace pwlent {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_terms(std::initializer_list<std::pair<unsigned, long>> terms) {
    std::vector<BigInt> c;
    for (auto [d, v] : terms) {
        if (c.size() <= d) c.resize(d + 1, 0);
        c[d] += v;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(unsigned degree, const BigInt& c) {
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

BigRational IntPolynomial::eval(const BigRational& x) const {
    if (c_.empty()) return 0;
    // Homogeneous Horner: sum a_i n^i d^(deg-i), then divide by d^deg.
    BigInt n = x.num(), d = x.den();
    BigInt acc = c_.back(), dpow = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        dpow *= d;
        acc = acc * n + c_[i] * dpow;
    }
    return BigRational(acc, dpow);
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::strip_lambda() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return IntPolynomial(std::vector<BigInt>(c_.begin() + static_cast<long>(k), c_.end()));
}

IntPolynomial IntPolynomial::primitive() const {
    if (c_.empty()) return {};
    BigInt g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    if (g == 1) return *this;
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error("pseudo-remainder by zero polynomial");
    std::vector<BigInt> r = a.coeffs();
    const int db = b.degree();
    const BigInt lb = b.leading();
    const BigInt scale = abs(lb);
    const int sgn_lb = sgn(lb);
    // Each step: r <- |lb| r - sgn(lb) lc(r) x^k b, which kills the top term with a positive factor.
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        BigInt lr = r.back();
        const int shift = dr - db;
        for (auto& v : r) v *= scale;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(shift + j)] -= sgn_lb * lr * b.coeffs()[static_cast<std::size_t>(j)];
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

unsigned descartes_positive_sign_changes(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("sign changes of the zero polynomial");
    unsigned changes = 0;
    int last = 0;
    for (const auto& v : p.coeffs()) {
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

BigRational cauchy_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw Error("root bound of the zero polynomial");
    BigInt m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(abs(p.coeffs()[static_cast<std::size_t>(i)])));
    return BigRational(1) + BigRational(m, abs(p.leading()));
}

namespace {

BigRational tolerance(unsigned digits) { return BigRational(1) / BigRational(10).pow(digits); }

}  // namespace

void refine(RootInterval& r, unsigned digits) {
    if (r.exact()) return;
    const BigRational eps = tolerance(digits);
    IntPolynomial q = r.poly.strip_lambda();
    int slo = q.sign_at(r.lo);
    while (r.width() >= eps) {
        BigRational m = r.mid();
        int s = q.sign_at(m);
        if (s == 0) {
            r.lo = r.hi = m;
            return;
        }
        if (s == slo) r.lo = m; else r.hi = m;
    }
}

RootInterval isolate_unique_positive_root(const IntPolynomial& p, unsigned digits) {
    if (descartes_positive_sign_changes(p) != 1) throw Error("polynomial does not have exactly one sign change");
    IntPolynomial q = p.strip_lambda();
    RootInterval r{1, 1, p};
    int s1 = q.sign_at(1);
    if (s1 == 0) return r;
    if (s1 == sgn(q.leading())) {
        r.lo = 0;
    } else {
        r.hi = cauchy_bound(q);
    }
    refine(r, digits);
    return r;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
    std::vector<IntPolynomial> seq{p.primitive()};
    IntPolynomial d = p.derivative().primitive();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        IntPolynomial r = positive_pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back((-r).primitive());
    }
    return seq;
}

namespace {

unsigned sign_variations(const std::vector<IntPolynomial>& seq, const BigRational& x) {
    unsigned v = 0;
    int last = 0;
    for (const auto& s : seq) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

}  // namespace

unsigned sturm_count(const std::vector<IntPolynomial>& seq, const BigRational& a, const BigRational& b) {
    unsigned va = sign_variations(seq, a), vb = sign_variations(seq, b);
    return va >= vb ? va - vb : 0;
}

RootInterval isolate_largest_real_root(const IntPolynomial& p, unsigned digits) {
    if (p.is_zero()) throw Error("largest root of the zero polynomial");
    IntPolynomial q = p.strip_lambda();
    const bool zero_root = q.degree() < p.degree();
    if (q.degree() == 0) {
        if (zero_root) return {0, 0, p};
        throw Error("polynomial has no real root");
    }
    auto seq = sturm_sequence(q);
    BigRational bound = cauchy_bound(q);
    if (sturm_count(seq, -bound, bound) == 0) {
        if (zero_root) return {0, 0, p};
        throw Error("polynomial has no real root");
    }
    // Spectral radii are often exactly 1.
    if (q.sign_at(1) == 0 && sturm_count(seq, 1, bound) == 0) return {1, 1, p};

    RootInterval r{-bound, bound, p};
    const BigRational eps = tolerance(digits);
    // Invariant: largest root lies in (lo, hi] and none lies in (hi, bound].
    while (true) {
        bool isolated = sturm_count(seq, r.lo, r.hi) == 1;
        if (isolated && r.width() < eps) break;
        if (isolated) {
            // Single root left: plain sign bisection is cheaper.
            int slo = q.sign_at(r.lo);
            if (slo != 0 && q.sign_at(r.hi) != slo) {
                refine(r, digits);
                break;
            }
        }
        BigRational m = r.mid();
        if (sturm_count(seq, m, bound) > 0) {
            r.lo = m;
        } else {
            if (q.sign_at(m) == 0) return {m, m, p};
            r.hi = m;
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::term(int exponent, const BigInt& c) {
    LaurentPolynomial l;
    if (c != 0) l.t_[exponent] = c;
    return l;
}

int LaurentPolynomial::min_exponent() const {
    if (t_.empty()) throw Error("exponent of zero Laurent polynomial");
    return t_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (t_.empty()) throw Error("exponent of zero Laurent polynomial");
    return t_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.t_) {
        BigInt& v = t_[e];
        v += c;
        if (v == 0) t_.erase(e);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.t_) {
        BigInt& v = t_[e];
        v -= c;
        if (v == 0) t_.erase(e);
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r += LaurentPolynomial::term(ea + eb, ca * cb);
    return r;
}

IntPolynomial LaurentPolynomial::shifted(int shift) const {
    if (t_.empty()) return {};
    if (min_exponent() + shift < 0) throw Error("shift leaves negative exponents");
    std::vector<BigInt> c(static_cast<std::size_t>(max_exponent() + shift + 1), 0);
    for (const auto& [e, v] : t_) c[static_cast<std::size_t>(e + shift)] = v;
    return IntPolynomial(std::move(c));
}

LaurentPolynomial laurent_poly_det(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 0) return LaurentPolynomial::term(0, 1);
    if (n > 20) throw Error("Laurent determinant too large");
    // dp[mask]: signed sum over assignments of the first popcount(mask) rows to columns in mask.
    std::vector<LaurentPolynomial> dp(std::size_t{1} << n);
    std::vector<bool> live(dp.size(), false);
    dp[0] = LaurentPolynomial::term(0, 1);
    live[0] = true;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!live[mask] || dp[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            if (m[row][j].is_zero()) continue;
            const int above = __builtin_popcountll(mask >> (j + 1));
            LaurentPolynomial t = dp[mask] * m[row][j];
            std::size_t next = mask | (std::size_t{1} << j);
            if (above % 2) dp[next] -= t; else dp[next] += t;
            live[next] = true;
        }
    }
    return dp.back();
}

}  // namespace pwlent
