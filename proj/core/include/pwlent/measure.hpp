#pragma once

#include <string>
#include <vector>

#include "pwlent/graphs.hpp"

namespace pwlent {

struct CaptureStep {
    BigRational captured, uncaptured;
};

// Lengths are measured in each segment's chart coordinate.
struct CaptureProfile {
    std::string edge;
    BigRational length;
    std::vector<CaptureStep> by_depth;  // depth 0..depth
};

// Edge labels: NegB "A","B","C","D","E","G","H" (F^7); AlphaWindow "Pi" (F^6);
// BetaWindow "Sigma" (F^7). Throws when the induced map does not send the edge into itself.
CaptureProfile edge_capture_profile(Regime r, const BigRational& b, const std::string& edge, std::size_t depth);

std::vector<std::string> measured_edges(Regime r);

// Segment of Γ named by a label above, or "P6R1" / "plateau" for NegB.
Segment labelled_segment(Regime r, const BigRational& b, const std::string& label);

struct MeasureReport {
    Regime regime;
    BigRational b;
    std::vector<CaptureProfile> profiles;  // includes the NegB feeder and plateau rows
    BigRational total_length;
    std::vector<BigRational> uncaptured;   // summed over profiles, per depth
    BigRational uncaptured_fraction;       // at the final depth
};

MeasureReport full_measure_report(Regime r, const BigRational& b, std::size_t depth);

// Parts of the edge not captured within `depth` steps of its induced map.
std::vector<Interval> uncaptured_on_edge(Regime r, const BigRational& b, const std::string& edge, std::size_t depth);

}  // namespace pwlent
