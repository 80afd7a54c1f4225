#include "pwlent/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace pwlent {

Digraph Digraph::induced(const std::vector<std::size_t>& nodes) const {
    Digraph g;
    g.adj.assign(nodes.size(), std::vector<std::uint8_t>(nodes.size(), 0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g.labels.push_back(nodes[i] < labels.size() ? labels[nodes[i]] : std::to_string(nodes[i]));
        for (std::size_t j = 0; j < nodes.size(); ++j) g.adj[i][j] = adj[nodes[i]][nodes[j]];
    }
    return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const Digraph& dg) {
    const std::size_t n = dg.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    int counter = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (!dg.edge(v, w)) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    return out;
}

std::vector<std::vector<std::size_t>> cyclic_components(const Digraph& dg) {
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : strongly_connected_components(dg))
        if (c.size() > 1 || dg.edge(c[0], c[0])) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_acyclic_without(const Digraph& dg, const Rome& r) {
    const std::size_t n = dg.size();
    std::vector<bool> removed(n, false);
    for (auto v : r) {
        if (v >= n) throw Error("rome node out of range");
        removed[v] = true;
    }
    // Kahn's algorithm on the remaining nodes.
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!removed[i] && !removed[j] && dg.edge(i, j)) ++indeg[j];
    std::vector<std::size_t> queue;
    std::size_t alive = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (removed[i]) continue;
        ++alive;
        if (indeg[i] == 0) queue.push_back(i);
    }
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t v = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t w = 0; w < n; ++w)
            if (!removed[w] && dg.edge(v, w) && --indeg[w] == 0) queue.push_back(w);
    }
    return seen == alive;
}

bool is_rome(const Digraph& dg, const Rome& r) { return is_acyclic_without(dg, r); }

Rome find_rome(const Digraph& dg) {
    Rome rome;
    for (const auto& comp : cyclic_components(dg)) {
        Digraph sub = dg.induced(comp);
        const std::size_t m = comp.size();
        std::vector<std::size_t> forced, free;
        for (std::size_t i = 0; i < m; ++i) (sub.edge(i, i) ? forced : free).push_back(i);
        // Busier nodes first so ties resolve towards hubs.
        auto outdeg = [&](std::size_t i) {
            return std::count(sub.adj[i].begin(), sub.adj[i].end(), std::uint8_t{1});
        };
        std::stable_sort(free.begin(), free.end(), [&](std::size_t a, std::size_t b) { return outdeg(a) > outdeg(b); });

        std::vector<std::size_t> best;
        bool found = false;
        std::size_t budget = 5'000'000;
        for (std::size_t k = 0; k <= free.size() && !found; ++k) {
            std::vector<std::size_t> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                Rome trial = forced;
                for (auto p : pick) trial.push_back(free[p]);
                if (is_acyclic_without(sub, trial)) {
                    best = trial;
                    found = true;
                    break;
                }
                if (--budget == 0) break;
                // next combination
                std::size_t i = k;
                while (i > 0 && pick[i - 1] == free.size() - k + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
            if (budget == 0) break;
        }
        if (!found) {
            // Greedy fallback: keep removing the busiest node until acyclic.
            best = forced;
            for (auto f : free) {
                if (is_acyclic_without(sub, best)) break;
                best.push_back(f);
            }
        }
        for (auto v : best) rome.push_back(comp[v]);
    }
    std::sort(rome.begin(), rome.end());
    return rome;
}

LaurentMatrix rome_path_matrix(const Digraph& dg, const Rome& r) {
    if (!is_rome(dg, r)) throw Error("node set is not a rome");
    const std::size_t n = dg.size(), k = r.size();
    std::vector<long> pos(n, -1);
    for (std::size_t i = 0; i < k; ++i) pos[r[i]] = static_cast<long>(i);
    // memo[v][j]: sum over paths from non-rome v to rome node j (interior avoiding the rome) of λ^-len.
    std::vector<std::vector<LaurentPolynomial>> memo(n);
    std::vector<bool> done(n, false);
    std::function<const std::vector<LaurentPolynomial>&(std::size_t)> from = [&](std::size_t v) -> const std::vector<LaurentPolynomial>& {
        if (done[v]) return memo[v];
        std::vector<LaurentPolynomial> acc(k);
        const LaurentPolynomial step = LaurentPolynomial::term(-1);
        for (std::size_t w = 0; w < n; ++w) {
            if (!dg.edge(v, w)) continue;
            if (pos[w] >= 0) {
                acc[static_cast<std::size_t>(pos[w])] += step;
            } else {
                const auto& sub = from(w);
                for (std::size_t j = 0; j < k; ++j)
                    if (!sub[j].is_zero()) acc[j] += step * sub[j];
            }
        }
        memo[v] = std::move(acc);
        done[v] = true;
        return memo[v];
    };
    LaurentMatrix a(k, std::vector<LaurentPolynomial>(k));
    for (std::size_t i = 0; i < k; ++i) a[i] = from(r[i]);
    return a;
}

IntPolynomial rome_full_char_poly(const Digraph& dg, const Rome& r) {
    LaurentMatrix a = rome_path_matrix(dg, r);
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= LaurentPolynomial::term(0, 1);
    LaurentPolynomial det = laurent_poly_det(a);
    // (-1)^(n-k) λ^n det(A_R - E) is det(M - λE); flip to the monic convention.
    const int n = static_cast<int>(dg.size());
    const bool negate = (a.size() % 2) == 1;
    IntPolynomial p = det.is_zero() ? IntPolynomial{} : det.shifted(n);
    return negate ? -p : p;
}

std::size_t dominant_polynomial(const std::vector<IntPolynomial>& polys) {
    if (polys.empty()) throw Error("no polynomials to compare");
    std::vector<RootInterval> roots;
    for (const auto& p : polys) roots.push_back(isolate_largest_real_root(p, 20));
    std::size_t best = 0;
    for (std::size_t i = 1; i < polys.size(); ++i) {
        RootInterval& a = roots[best];
        RootInterval& b = roots[i];
        for (unsigned digits = 40; digits <= 640; digits *= 2) {
            if (a.hi < b.lo || b.hi < a.lo) break;
            if (a.exact() && b.exact()) break;
            refine(a, digits);
            refine(b, digits);
        }
        if (a.hi < b.lo) best = i;
    }
    return best;
}

namespace {

IntPolynomial dominant_factor(const Digraph& dg, const std::function<IntPolynomial(const Digraph&)>& factor_of) {
    auto comps = cyclic_components(dg);
    if (comps.empty()) return IntPolynomial::monomial(1);
    std::vector<IntPolynomial> factors;
    for (const auto& c : comps) factors.push_back(factor_of(dg.induced(c)).strip_lambda());
    return factors[dominant_polynomial(factors)];
}

}  // namespace

IntPolynomial rome_char_poly(const Digraph& dg, const Rome& r) {
    if (!is_rome(dg, r)) throw Error("node set is not a rome");
    auto comps = cyclic_components(dg);
    if (comps.empty()) return IntPolynomial::monomial(1);
    std::vector<IntPolynomial> factors;
    for (const auto& c : comps) {
        Rome local;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (std::find(r.begin(), r.end(), c[i]) != r.end()) local.push_back(i);
        factors.push_back(rome_full_char_poly(dg.induced(c), local).strip_lambda());
    }
    return factors[dominant_polynomial(factors)];
}

IntPolynomial direct_char_poly(const Digraph& dg) {
    const std::size_t n = dg.size();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    using Mat = std::vector<std::vector<BigInt>>;
    Mat a(n, std::vector<BigInt>(n, 0)), m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = dg.adj[i][j];
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        Mat next(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += m[l][j];
            }
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        m = std::move(next);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (a[i][l] != 0) tr += m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial direct_relevant_factor(const Digraph& dg) { return dominant_factor(dg, direct_char_poly); }

double power_iteration_radius(const Digraph& dg, std::size_t max_steps) {
    double best = 0.0;
    for (const auto& comp : cyclic_components(dg)) {
        Digraph sub = dg.induced(comp);
        const std::size_t n = sub.size();
        // A + I is primitive on a strongly connected component, so the iteration converges.
        std::vector<double> v(n, 1.0), w(n);
        double lo = 0, hi = 0;
        for (std::size_t step = 0; step < max_steps; ++step) {
            for (std::size_t i = 0; i < n; ++i) {
                double s = v[i];
                for (std::size_t j = 0; j < n; ++j)
                    if (sub.edge(i, j)) s += v[j];
                w[i] = s;
            }
            lo = HUGE_VAL;
            hi = 0;
            double norm = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double r = w[i] / v[i];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                norm = std::max(norm, w[i]);
            }
            for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
            if (hi - lo < 1e-13 * hi && step >= 10) break;
        }
        best = std::max(best, 0.5 * (lo + hi) - 1.0);
    }
    return best;
}

RootInterval spectral_radius(const Digraph& dg, unsigned digits, bool cross_check) {
    if (cyclic_components(dg).empty()) return {0, 0, IntPolynomial::monomial(1)};
    IntPolynomial f = rome_char_poly(dg, find_rome(dg));
    RootInterval r = descartes_positive_sign_changes(f) == 1 ? isolate_unique_positive_root(f, digits)
                                                              : isolate_largest_real_root(f, digits);
    if (cross_check) {
        double pw = power_iteration_radius(dg);
        if (pw < r.lo.to_double() - 1e-9 || pw > r.hi.to_double() + 1e-9)
            throw Error("spectral radius cross-check failed: exact [" + r.lo.decimal(12) + ", " + r.hi.decimal(12) +
                        "] vs power iteration " + std::to_string(pw));
    }
    return r;
}

EntropyBounds entropy_bounds(const Digraph& lower, const Digraph& upper, unsigned digits) {
    EntropyBounds e{spectral_radius(lower, digits), spectral_radius(upper, digits), {}, {}};
    if (e.lower_radius.hi.sign() == 0 || e.upper_radius.hi.sign() == 0) throw Error("entropy of an acyclic digraph is -inf");
    e.lower = log_enclosure(e.lower_radius);
    e.upper = log_enclosure(e.upper_radius);
    return e;
}

std::string digraph_to_dot(const Digraph& dg, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < dg.size(); ++i) os << "  \"" << dg.labels[i] << "\";\n";
    for (std::size_t i = 0; i < dg.size(); ++i)
        for (std::size_t j = 0; j < dg.size(); ++j)
            if (dg.edge(i, j)) os << "  \"" << dg.labels[i] << "\" -> \"" << dg.labels[j] << "\";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::size_t> simple_cycle_lengths(const Digraph& dg) {
    const std::size_t n = dg.size();
    std::vector<std::size_t> out;
    std::vector<bool> on(n, false);
    std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v, std::size_t len) {
        for (std::size_t w = start; w < n; ++w) {
            if (!dg.edge(v, w)) continue;
            if (w == start) {
                out.push_back(len + 1);
            } else if (!on[w]) {
                on[w] = true;
                dfs(start, w, len + 1);
                on[w] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        on[s] = true;
        dfs(s, s, 0);
        on[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pwlent
