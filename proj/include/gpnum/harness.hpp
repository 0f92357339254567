#pragma once

// Theorem verification sweep: build the graphs a formula speaks about,
// compare the prediction with the solver, and tabulate the outcome.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gpnum/formulas.hpp"
#include "gpnum/gp_solver.hpp"
#include "gpnum/invariants.hpp"
#include "gpnum/search.hpp"

namespace gpnum {

using Json = nlohmann::ordered_json;

enum class Verdict { match, within_bound, mismatch, timeout, not_applicable };
std::string_view to_string(Verdict v);

struct TheoremReport {
  std::string theorem;
  Json params;
  Prediction predicted;
  std::optional<GpResult> computed;
  Verdict verdict = Verdict::not_applicable;
  std::int64_t elapsed_ms = 0;
  std::string note;
};

struct GridPoint {
  std::string theorem;
  Json params;
  /// Per-point budget override from the manifest, in milliseconds.
  std::optional<std::int64_t> budget_ms;
};

enum class GridKind { quick, stretch };

/// Registered theorem ids in sweep order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);

/// The checked-in grid manifest.
const Json& default_manifest();

/// Expands one grid: an array of objects (or a single object) whose array
/// values are alternatives, taken as a Cartesian product in key order.
/// Throws InputError on malformed input.
std::vector<Json> expand_grid(const Json& grid);

/// Grid points for the given theorems (all of them when `ids` is empty).
std::vector<GridPoint> manifest_points(const Json& manifest, const std::vector<std::string>& ids,
                                       GridKind kind);

/// Prediction for one parameter point. Theorems whose right-hand side is made
/// of invariants of the factors (joins, coronas, diameter two) compute those
/// invariants within `budget`; a budget overrun leaves applicable == false
/// with a reason.
Prediction predict(std::string_view theorem, const Json& params, const Budget& budget = {});

TheoremReport run_point(const GridPoint& point, const Budget& budget);

struct VerifyOptions {
  Budget budget{};
  unsigned jobs = 1;
};

/// Runs every point, `jobs` at a time; reports come back in grid order.
std::vector<TheoremReport> run_points(const std::vector<GridPoint>& points,
                                      const VerifyOptions& options);

std::vector<TheoremReport> run_verify(std::string_view theorem, const Json& grid,
                                      const VerifyOptions& options);

enum class TableFormat { json_lines, csv };

/// CSV header: theorem,params,predicted,computed,status,verdict,ms.
std::string emit_table(const std::vector<TheoremReport>& reports, TableFormat format);

/// 1 on any mismatch; otherwise 3 when `strict` and some point timed out;
/// otherwise 0.
int verify_exit_code(const std::vector<TheoremReport>& reports, bool strict);

Json to_json(const VertexSet& s);
Json to_json(const GpResult& r);
Json to_json(const InvariantResult& r);
Json to_json(const TheoremReport& r);
/// {"theorem", "params", "applicable", "value_or_interval", "witness"}.
Json prediction_json(std::string_view theorem, const Json& params, const Prediction& p);

}  // namespace gpnum
