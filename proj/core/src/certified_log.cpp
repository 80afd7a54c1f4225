#include "pwlent/certified_log.hpp"

#include <mpfr.h>

namespace pwlent {

namespace {

class Mpfr {
public:
    explicit Mpfr(unsigned bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

BigRational log_bound(const BigRational& x, unsigned bits, mpfr_rnd_t dir) {
    Mpfr in(bits), out(bits);
    // Rounding the argument in the same direction keeps the bound valid since ln is increasing.
    mpfr_set_q(in.get(), x.raw().get_mpq_t(), dir);
    mpfr_log(out.get(), in.get(), dir);
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), out.get());
    return BigRational(q);
}

}  // namespace

RealEnclosure log_enclosure(const RootInterval& r, unsigned bits) {
    if (r.lo.sign() <= 0) throw Error("logarithm of a non-positive enclosure");
    if (r.lo == 1 && r.hi == 1) return {0, 0};
    return {log_bound(r.lo, bits, MPFR_RNDD), log_bound(r.hi, bits, MPFR_RNDU)};
}

std::string round_decimal(const BigRational& x, unsigned places) {
    BigRational scale = BigRational(10).pow(places);
    BigRational shifted = x.abs() * scale + BigRational(1, 2);
    BigRational r(shifted.floor(), BigInt(1));
    r /= scale;
    if (x.sign() < 0 && !r.is_zero()) r = -r;
    return r.decimal(places);
}

std::optional<std::string> agreed_rounding(const RealEnclosure& e, unsigned places) {
    std::string a = round_decimal(e.lo, places), b = round_decimal(e.hi, places);
    if (a != b) return std::nullopt;
    return a;
}

std::string certified_log_decimal(RootInterval r, unsigned places) {
    for (unsigned extra = 8; extra <= 512; extra *= 2) {
        refine(r, places + extra);
        unsigned bits = static_cast<unsigned>(3.33 * (places + 2 * extra)) + 64;
        if (auto s = agreed_rounding(log_enclosure(r, bits), places)) return *s;
    }
    throw Error("could not certify rounding of logarithm");
}

std::string certified_log_decimal(const BigRational& x, unsigned places) {
    for (unsigned bits = 128; bits <= 8192; bits *= 2) {
        RealEnclosure e{log_bound(x, bits, MPFR_RNDD), log_bound(x, bits, MPFR_RNDU)};
        if (auto s = agreed_rounding(e, places)) return *s;
    }
    throw Error("could not certify rounding of logarithm");
}

}  // namespace pwlent
