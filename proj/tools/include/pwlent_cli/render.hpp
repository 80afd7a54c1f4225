#pragma once

#include <string>

#include <json.hpp>

#include "pwlent/cover.hpp"
#include "pwlent/graphs.hpp"
#include "pwlent/transition.hpp"

namespace pwlent::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Coordinates stay exact strings; only the SVG rounds, at render time.
Json graph_to_json(const PlanarGraph& g, Regime r, const BigRational& b);
std::string graph_to_svg(const PlanarGraph& g, Regime r, const BigRational& b);
std::string graph_to_dot(const PlanarGraph& g, Regime r, const BigRational& b);

Json cover_to_json(const CoverDigraph& cd, const BigRational& b);

Json certificate_to_json(const Certificate& c);
Json certified_interval_to_json(const CertifiedInterval& ci);

// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace pwlent::cli
