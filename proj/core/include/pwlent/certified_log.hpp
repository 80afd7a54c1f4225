#pragma once

#include <optional>
#include <string>

#include "pwlent/polynomial.hpp"

namespace pwlent {

// Rational bounds lo <= value <= hi for a real that is not itself rational.
struct RealEnclosure {
    BigRational lo, hi;
};

// ln of every point of [r.lo, r.hi], widened outward; requires r.lo > 0.
RealEnclosure log_enclosure(const RootInterval& r, unsigned bits = 256);

// Both ends rounded half-up to `places` decimals; empty if they disagree.
std::optional<std::string> agreed_rounding(const RealEnclosure& e, unsigned places);

// ln(root) rounded to `places` decimals, refining the root until the rounding is certain.
std::string certified_log_decimal(RootInterval r, unsigned places);

// Certified rounding of ln(x) for positive rational x (x = 2 gives ln 2).
std::string certified_log_decimal(const BigRational& x, unsigned places);

std::string round_decimal(const BigRational& x, unsigned places);

}  // namespace pwlent
