#pragma once

#include <string>
#include <vector>

#include "pwlent/digraph.hpp"
#include "pwlent/family.hpp"

namespace pwlent {

enum class CoverMode { Markov, Lower, Upper };

std::string cover_mode_name(CoverMode m);

struct CoverNode {
    std::string label;
    Segment seg;
};

// Lower/Markov: i -> j when node j lies inside F(node i).
// Upper: i -> j when F(node i) meets node j in a set of positive length.
// Markov additionally requires every positive-length overlap to be a full inclusion.
struct CoverDigraph {
    std::vector<CoverNode> nodes;
    Digraph graph;
    CoverMode mode;
};

// Throws when two partition nodes overlap, when a node leaves the graph, or when
// Markov mode meets a partial overlap.
CoverDigraph build_cover_digraph(const PlanarGraph& graph, const std::vector<CoverNode>& partition,
                                 const Params& params, CoverMode mode);

// Image of a segment under F as non-degenerate segments, one per quadrant piece.
std::vector<Segment> image_pieces(const Params& params, const Segment& s);

// Partition of the Band48 graph at level n (4 < b < 8): the ten level-0 intervals
// refined along the orbit x_k of (b-10,-1) and its first two images.
std::vector<CoverNode> band48_partition(const BigRational& b, unsigned level);

}  // namespace pwlent
