#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwlent/certified_log.hpp"
#include "pwlent/polynomial.hpp"

namespace pwlent {

struct Digraph {
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint8_t>> adj;

    std::size_t size() const { return adj.size(); }
    bool edge(std::size_t i, std::size_t j) const { return adj[i][j] != 0; }
    Digraph induced(const std::vector<std::size_t>& nodes) const;
};

using Rome = std::vector<std::size_t>;

// Tarjan; components in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& dg);
// Components that carry at least one cycle.
std::vector<std::vector<std::size_t>> cyclic_components(const Digraph& dg);

bool is_acyclic_without(const Digraph& dg, const Rome& r);
bool is_rome(const Digraph& dg, const Rome& r);
// Minimum-cardinality rome; brute force per cyclic component.
Rome find_rome(const Digraph& dg);

// Path matrix A_R: entry (i,j) sums λ^-len over paths r_i -> r_j whose interior avoids the rome.
LaurentMatrix rome_path_matrix(const Digraph& dg, const Rome& r);

// det(λE - M) computed from the rome: (-1)^k λ^n det(A_R(λ) - E) with k = |R|.
IntPolynomial rome_full_char_poly(const Digraph& dg, const Rome& r);
// Factor carrying the spectral radius: stripped char poly of the dominant cyclic component.
IntPolynomial rome_char_poly(const Digraph& dg, const Rome& r);

// det(λE - M) by Faddeev-LeVerrier over the integers.
IntPolynomial direct_char_poly(const Digraph& dg);
IntPolynomial direct_relevant_factor(const Digraph& dg);

// Of several polynomials, the index of the one with the largest real root (first on ties).
std::size_t dominant_polynomial(const std::vector<IntPolynomial>& polys);

// Floating-point Perron root by power iteration on each cyclic component.
double power_iteration_radius(const Digraph& dg, std::size_t max_steps = 100000);

// Exact enclosure; 0 for DAGs. Cross-checked against power iteration when requested.
RootInterval spectral_radius(const Digraph& dg, unsigned digits, bool cross_check = true);

struct EntropyBounds {
    RootInterval lower_radius, upper_radius;
    RealEnclosure lower, upper;
};

EntropyBounds entropy_bounds(const Digraph& lower, const Digraph& upper, unsigned digits);

// Edges listed by label; deterministic.
std::string digraph_to_dot(const Digraph& dg, const std::string& name = "G");

// Lengths of simple cycles (one entry per cycle), ascending. Exponential; for small graphs.
std::vector<std::size_t> simple_cycle_lengths(const Digraph& dg);

}  // namespace pwlent
