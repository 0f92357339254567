#include "gpnum/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "gpnum/constructions.hpp"
#include "gpnum/error.hpp"

namespace gpnum {

namespace {

Prediction not_applicable(std::string reason) {
  Prediction p;
  p.reason = std::move(reason);
  return p;
}

Prediction exactly(std::int64_t value, std::optional<VertexSet> witness = std::nullopt) {
  Prediction p;
  p.applicable = true;
  p.lower = p.upper = value;
  p.witness = std::move(witness);
  return p;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  return static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)));
}

// Vertex of line_graph(complete(n)) for the edge {u, v}, u < v (0-based).
Vertex line_vertex(std::int64_t n, std::int64_t u, std::int64_t v) {
  const std::int64_t before = u * (n - 1) - u * (u - 1) / 2;
  return static_cast<Vertex>(before + (v - u - 1));
}

}  // namespace

VertexSet kneser_star(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw InputError("star needs 1 <= k <= n");
  std::vector<Vertex> members(binomial(n - 1, k - 1));
  std::iota(members.begin(), members.end(), Vertex{0});
  return VertexSet(std::move(members));
}

Prediction gp_kneser2(std::int64_t n) {
  if (n < 4) return not_applicable("requires n >= 4");
  if (n <= 6) {
    std::vector<Vertex> six;
    for (std::uint32_t a = 1; a <= 4; ++a)
      for (std::uint32_t b = a + 1; b <= 4; ++b)
        six.push_back(kneser_vertex(static_cast<std::size_t>(n), {a, b}));
    return exactly(6, VertexSet(std::move(six)));
  }
  return exactly(n - 1, kneser_star(static_cast<std::size_t>(n), 2));
}

Prediction gp_kneser3(std::int64_t n) {
  if (n < 6) return not_applicable("requires n >= 6");
  if (n == 6) {
    std::vector<Vertex> all(20);
    std::iota(all.begin(), all.end(), Vertex{0});
    return exactly(20, VertexSet(std::move(all)));
  }
  return exactly(choose(n - 1, 2), kneser_star(static_cast<std::size_t>(n), 3));
}

Prediction kneser_condition(std::int64_t n, std::int64_t k) {
  if (k < 2) return not_applicable("requires k >= 2");
  if (n < 3 * k - 1) return not_applicable("requires n >= 3k - 1");
  try {
    const std::int64_t target = choose(n - 1, k - 1);
    for (std::int64_t t = 2; t <= k; ++t) {
      __int128 lhs = 1;
      for (std::int64_t i = 0; i < t; ++i) lhs *= k;
      lhs = lhs * choose(n - t, k - t) + t;
      if (lhs > target) {
        Prediction p = not_applicable("inequality fails at t = " + std::to_string(t));
        p.failing_t = t;
        return p;
      }
    }
    std::optional<VertexSet> witness;
    if (n <= 64 && static_cast<std::uint64_t>(target) <= kMaxOrder)
      witness = kneser_star(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
    return exactly(target, std::move(witness));
  } catch (const InputError&) {
    return not_applicable("parameters too large");
  }
}

Prediction star_independence_bound(std::int64_t n, std::int64_t k) {
  if (k < 1) return not_applicable("requires k >= 1");
  if (n < 2 * k) return not_applicable("requires n >= 2k");
  std::optional<VertexSet> witness;
  const std::int64_t value = choose(n - 1, k - 1);
  if (n <= 64 && static_cast<std::uint64_t>(value) <= kMaxOrder)
    witness = kneser_star(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  return exactly(value, std::move(witness));
}

Prediction gp_cartesian_lower(std::int64_t gp_g, std::int64_t gp_h, std::int64_t order_g,
                              std::int64_t order_h) {
  Prediction p;
  p.applicable = true;
  p.lower = gp_g + gp_h - 2;
  p.upper = order_g * order_h;
  return p;
}

VertexSet cartesian_witness(const Graph& g, const VertexSet& s_g, const Graph& h,
                            const VertexSet& s_h, Vertex anchor_g, Vertex anchor_h) {
  require_in_range(s_g, g.order());
  require_in_range(s_h, h.order());
  if (!s_g.contains(anchor_g)) throw InputError("anchor of the first factor is not in its set");
  if (!s_h.contains(anchor_h)) throw InputError("anchor of the second factor is not in its set");
  const std::size_t nh = h.order();
  std::vector<Vertex> out;
  for (Vertex a : s_g)
    if (a != anchor_g) out.push_back(static_cast<Vertex>(a * nh + anchor_h));
  for (Vertex b : s_h)
    if (b != anchor_h) out.push_back(static_cast<Vertex>(anchor_g * nh + b));
  return VertexSet(std::move(out));
}

Prediction hamming_lower(std::span<const std::size_t> ns) {
  if (ns.size() < 2) return not_applicable("requires at least two factors");
  if (std::any_of(ns.begin(), ns.end(), [](std::size_t x) { return x < 2; }))
    return not_applicable("requires every factor order >= 2");
  Prediction p;
  p.applicable = true;
  std::int64_t sum = 0, product = 1;
  for (auto x : ns) {
    sum += static_cast<std::int64_t>(x);
    product *= static_cast<std::int64_t>(x);
  }
  p.lower = sum - static_cast<std::int64_t>(ns.size());
  p.upper = ns.size() == 2 ? p.lower : product;
  p.witness = hamming_witness(ns);
  return p;
}

VertexSet hamming_witness(std::span<const std::size_t> ns) {
  std::vector<Vertex> out;
  std::size_t stride = 1;
  for (std::size_t i = ns.size(); i-- > 0;) {
    for (std::size_t j = 1; j < ns[i]; ++j) out.push_back(static_cast<Vertex>(j * stride));
    stride *= ns[i];
  }
  return VertexSet(std::move(out));
}

Prediction gp_join(const JoinFactors& f) {
  if (f.both_complete) {
    Prediction p = exactly(f.order_g + f.order_h);
    p.alternate_form = p.lower;
    return p;
  }
  const std::int64_t omega_sum = f.omega_g + f.omega_h;
  Prediction p = exactly(std::max({omega_sum, f.rho_g, f.rho_h}));
  p.alternate_form = std::max({omega_sum, f.eta_g, f.eta_h});
  return p;
}

Prediction gp_corona(std::int64_t order_g, std::int64_t rho_h, std::int64_t order_h,
                     const std::optional<VertexSet>& rho_witness_h) {
  if (order_g < 2) return not_applicable("requires n(G) >= 2");
  Prediction p = exactly(order_g * rho_h);
  if (rho_witness_h) {
    std::vector<Vertex> out;
    for (std::int64_t i = 0; i < order_g; ++i)
      for (Vertex x : *rho_witness_h) out.push_back(static_cast<Vertex>(order_g + i * order_h + x));
    p.witness = VertexSet(std::move(out));
  }
  return p;
}

Prediction gp_line_complete(std::int64_t n) {
  if (n < 3) return not_applicable("requires n >= 3");
  std::vector<Vertex> members;
  if (n % 3 == 0) {
    for (std::int64_t i = 0; i < n / 3; ++i) {
      members.push_back(line_vertex(n, 3 * i, 3 * i + 1));
      members.push_back(line_vertex(n, 3 * i, 3 * i + 2));
      members.push_back(line_vertex(n, 3 * i + 1, 3 * i + 2));
    }
    return exactly(n, VertexSet(std::move(members)));
  }
  for (std::int64_t v = 1; v < n; ++v) members.push_back(line_vertex(n, 0, v));
  return exactly(n - 1, VertexSet(std::move(members)));
}

}  // namespace gpnum
