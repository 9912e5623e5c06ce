#pragma once

#include "mahler/approx/best_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mahler {

/// Geometric schedule base^1, ..., base^count.
std::vector<std::int64_t> geometric_schedule(std::int64_t base, int count);
/// Geometric schedule truncated at H_max.
std::vector<std::int64_t> schedule_up_to(std::int64_t base, std::int64_t H_max);

/// One (d, H) cell. `error` is set instead of `record` when the cell was
/// skipped (budget) or failed (precision); the table keeps going.
struct TableRow {
  int d = 1;
  std::int64_t H = 1;
  std::optional<ApproxRecord> record;
  std::string error;
};

struct DegreeEstimate {
  int d = 1;
  int points = 0;                // cells with an exponent
  double e_max = 0;              // running max of exponent midpoints
  std::int64_t argmax_H = 0;
  /// A new record was set at one of the last two schedule points.
  bool rising_tail = false;
};

struct ExponentTable {
  std::vector<TableRow> rows;
  std::vector<DegreeEstimate> degrees;
};

/// Best polynomials for every d in 1..d_max and H in the schedule, which
/// must be strictly increasing.
ExponentTable exponent_table(const RealConstant& theta, int d_max, const std::vector<std::int64_t>& schedule,
                             const SearchOptions& opt = {});

enum class Verdict { a_certified, a_suspected, s_suspected, t_suspected, u_suspected, inconclusive };
const char* to_string(Verdict v);

struct ClassifyOptions {
  int d_max = 3;
  std::int64_t H_max = 1000;
  std::int64_t base = 10;            // schedule base
  double divergence_threshold = 2.5;
  double search_budget = 5e6;        // max screened vectors per cell
  /// Degrees needing more screened vectors are cut at the largest
  /// schedule point within the budget.
  int min_points = 2;                // schedule points per degree for a verdict
  unsigned threads = 0;
};

struct ClassReport {
  RealConstant theta;
  ClassifyOptions options;
  ExponentTable table;
  std::vector<double> e_of_d;        // per degree, running max
  double e_global = 0;
  std::optional<int> d_frak;         // smallest diverging degree
  Verdict verdict = Verdict::inconclusive;
  /// [lo, hi] estimate; absent means "divergent" or not estimated.
  std::optional<std::pair<double, double>> type_estimate;
  std::optional<IntPoly> witness;    // exact vanishing polynomial for A-certified
  std::vector<double> t_of_d;        // 1 + log e(d) / log d for d >= 2
  std::string note;
};

/// Heuristic Mahler class with the evidence table. A-certified only with an
/// exact vanishing witness.
ClassReport classify_mahler(const RealConstant& theta, const ClassifyOptions& opt = {});

struct SpectraCell {
  double a = 0;  // growth exponent: height <= H_max^a
  double b = 0;  // decay exponent: |f(theta)|^(1/d) <= H_max^-b
  bool attainable = false;
  std::optional<IntPoly> witness;
};

/// Empirical portrait of attainable (growth, decay) exponent pairs from the
/// exponent table witnesses over the schedule up to H_max.
std::vector<SpectraCell> spectra_grid(const RealConstant& theta, int d, std::int64_t H_max,
                                      const std::vector<std::pair<double, double>>& grid, std::int64_t base = 2,
                                      const SearchOptions& opt = {});

std::string class_report_json(const ClassReport& r);

}  // namespace mahler
