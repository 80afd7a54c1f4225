#pragma once

#include <string>
#include <vector>

#include "pwlent/certified_log.hpp"
#include "pwlent/cover.hpp"

namespace pwlent {

enum class LevelKind { S, T, U, V };

struct LevelClass {
    unsigned n;
    LevelKind kind;
    friend bool operator==(const LevelClass&, const LevelClass&) = default;
};

std::string to_string(const LevelClass& lc);  // "T0", "S12"

struct Breakpoints {
    BigRational p, q, r, s;
};

// p_n, q_n, r_n, s_n; level n spans (p_{n-1}, p_n] with p_{-1} = 4.
Breakpoints breakpoints(unsigned n);
BigRational level_left_end(unsigned n);

// S_n=(p_{n-1},s_n), T_n=[s_n,r_n], U_n=(r_n,q_n), V_n=[q_n,p_n]. Throws outside (4,8).
LevelClass classify(const BigRational& b);

struct ClassRange {
    BigRational lo, hi;
    bool lo_closed, hi_closed;
};

ClassRange class_range(const LevelClass& lc);

enum class RootFamily { Alpha, Beta, Delta, Gamma, Phi };

std::string family_name(RootFamily f);
IntPolynomial family_polynomial(RootFamily f, unsigned n);

// S: {alpha, beta}; T: {delta}; U: {alpha, gamma}; V: {phi}.
std::vector<RootFamily> level_families(const LevelClass& lc);
std::vector<IntPolynomial> level_polynomials(const LevelClass& lc);

struct EntropyResult {
    LevelClass cls;
    bool exact;
    RootFamily lo_family, hi_family;
    RootInterval lo_root, hi_root;
    RealEnclosure lo, hi;           // ln of the roots
    std::string lo_text, hi_text;   // certified roundings
};

EntropyResult entropy_for_class(const LevelClass& lc, unsigned digits);
EntropyResult entropy_or_bounds(const BigRational& b, unsigned digits);

struct CrossCheck {
    LevelClass cls;
    std::vector<IntPolynomial> from_graph;  // lower (or markov), then upper
    std::vector<IntPolynomial> closed_form;
    std::vector<std::size_t> node_counts;
    bool agree;
};

// Rebuilds the Band48 cover digraphs at b and compares their relevant factors
// with the closed-form polynomials of b's class.
CrossCheck cross_validate(const BigRational& b);

// A representative rational strictly inside the class range.
BigRational class_sample(const LevelClass& lc);

// ((b-8) 4^{n+1} + 2 - b)/3, the n-th point of x -> 4x+b-2 from b-10.
BigRational x_orbit_point(const BigRational& b, unsigned n);

// 1 < alpha_n < phi_n < delta_n < gamma_n < beta_n for all n <= n_max.
bool verify_root_ordering(unsigned n_max);

// Roots of P_{f,n+1} lie strictly below roots of P_{f,n} for n < n_max.
bool verify_root_monotonicity(unsigned n_max);

// For λ > 1, P_{f,n}(λ) = 0 exactly when λ^{3n} = g_f(λ), and P_{f,n}(λ) > 0 when λ^{3n} > g_f(λ).
BigRational g_function(RootFamily f, const BigRational& lambda);

// Smallest n >= 0 with (1+eps)^{3n} > g_beta(1+eps); then beta_m < 1+eps for every m >= n.
unsigned continuity_level_bound(const BigRational& eps);

struct Table1Row {
    LevelClass cls;
    ClassRange range;
    EntropyResult entropy;
};

std::vector<Table1Row> table1(unsigned levels = 3, unsigned digits = 5);

}  // namespace pwlent
