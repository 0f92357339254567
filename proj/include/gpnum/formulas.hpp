#pragma once

// Closed-form gp predictions and the explicit general position sets behind
// them. Nothing here runs a search; predictions are meant to be compared
// against the solver.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpnum/graph.hpp"

namespace gpnum {

/// A predicted gp value, or an interval when only bounds are known.
/// Out-of-range parameters yield applicable == false with a reason instead of
/// an error, so parameter sweeps can tell "no claim here" from a mismatch.
struct Prediction {
  bool applicable = false;
  std::string reason;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  /// General position set in the canonical labeling of the constructed graph.
  std::optional<VertexSet> witness;
  /// Second algebraic form of the same value, when one exists (the η-form of
  /// the join formula). Must equal lower == upper.
  std::optional<std::int64_t> alternate_form;
  /// kneser_condition: the first t at which the inequality fails.
  std::optional<std::int64_t> failing_t;

  bool exact() const { return applicable && lower == upper; }
};

/// gp(K(n,2)): 6 for 4 <= n <= 6, n - 1 for n >= 7.
Prediction gp_kneser2(std::int64_t n);

/// gp(K(n,3)): 20 for n = 6, C(n-1, 2) for n >= 7.
Prediction gp_kneser3(std::int64_t n);

/// For n >= 3k - 1 and k >= 2: if k^t C(n-t, k-t) + t <= C(n-1, k-1) for all
/// 2 <= t <= k, then gp(K(n,k)) = C(n-1, k-1).
Prediction kneser_condition(std::int64_t n, std::int64_t k);

/// Upper bound on α(K(n,k)) for n >= 2k, attained by a star.
Prediction star_independence_bound(std::int64_t n, std::int64_t k);

/// Star of all k-subsets containing 1: vertices 0..C(n-1,k-1)-1 of kneser(n,k).
VertexSet kneser_star(std::size_t n, std::size_t k);

/// gp(G □ H) >= gp(G) + gp(H) - 2 for connected G, H; the order n(G)n(H)
/// bounds from above.
Prediction gp_cartesian_lower(std::int64_t gp_g, std::int64_t gp_h, std::int64_t order_g,
                              std::int64_t order_h);

/// (sG × {anchorH}) ∪ ({anchorG} × sH) minus (anchorG, anchorH), in the
/// row-major coordinates of cartesian_product(g, h).
VertexSet cartesian_witness(const Graph& g, const VertexSet& s_g, const Graph& h,
                            const VertexSet& s_h, Vertex anchor_g, Vertex anchor_h);

/// gp(K_{n1} □ ... □ K_{nk}) >= Σ n_i - k; equality for two factors.
Prediction hamming_lower(std::span<const std::size_t> ns);

/// Union over factors i of the vertices equal to 0 in every coordinate except
/// coordinate i, which ranges over 1..n_i - 1.
VertexSet hamming_witness(std::span<const std::size_t> ns);

struct JoinFactors {
  std::int64_t omega_g = 0, omega_h = 0;
  std::int64_t eta_g = 0, eta_h = 0;
  std::int64_t rho_g = 0, rho_h = 0;
  std::int64_t order_g = 0, order_h = 0;
  bool both_complete = false;
};

/// n(G) + n(H) when both factors are complete, otherwise
/// max{ω(G) + ω(H), ρ(G), ρ(H)}; the η-form max{ω(G) + ω(H), η(G), η(H)} is
/// reported as alternate_form.
Prediction gp_join(const JoinFactors& f);

/// gp(G ∘ H) = n(G) ρ(H) for n(G) >= 2. `rho_witness_h`, when given, is
/// copied into every copy of H to form the witness.
Prediction gp_corona(std::int64_t order_g, std::int64_t rho_h, std::int64_t order_h = 0,
                     const std::optional<VertexSet>& rho_witness_h = std::nullopt);

/// gp(L(K_n)) = n if 3 | n, else n - 1 (n >= 3).
Prediction gp_line_complete(std::int64_t n);

}  // namespace gpnum
