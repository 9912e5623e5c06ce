#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mahler {

/// Finite prefix x_1..x_n of a positive sequence, standing in for its class
/// modulo an ultrafilter. Entries are held as natural logs so products,
/// max, min and powers are exact pointwise operations on doubles.
class SeqClass {
 public:
  SeqClass() = default;
  /// Throws DomainError on an entry <= 0 or non-finite.
  static SeqClass from_values(const std::vector<double>& x);
  static SeqClass from_logs(std::vector<double> logs);
  /// x_i = exp(log_x(i)) for i = 1..n.
  static SeqClass generate(std::size_t n, const std::function<double(std::size_t)>& log_x);

  std::size_t size() const { return logs_.size(); }
  const std::vector<double>& logs() const { return logs_; }
  double log_at(std::size_t i) const { return logs_[i]; }

 private:
  std::vector<double> logs_;
};

/// Pointwise product.
SeqClass seq_mul(const SeqClass& x, const SeqClass& y);
/// Tropical sum: pointwise max.
SeqClass trop_add(const SeqClass& x, const SeqClass& y);
/// Tropical subtraction: pointwise min.
SeqClass trop_sub(const SeqClass& x, const SeqClass& y);
/// Frobenius power x_i^r, r > 0.
SeqClass frob_pow(const SeqClass& x, double r);

enum class SeqOrder { less, greater, equivalent, undecided };
const char* to_string(SeqOrder o);

struct SeqComparison {
  SeqOrder order = SeqOrder::undecided;
  /// Oscillation bounds of the normalized log-ratio slope over the tail.
  double liminf = 0;
  double limsup = 0;
  std::size_t tail_start = 0;
  std::size_t length = 0;
};

/// Compares x and y through s_i = (log x_i - log y_i) / D_i with
/// D_i = max(1, log(i+1), |log x_i|, |log y_i|) on the last `tail_fraction`
/// of the prefix. "<" when limsup < -tol, ">" when liminf > tol,
/// "equivalent" when both lie in [-tol, tol], otherwise undecided.
SeqComparison seq_cmp(const SeqClass& x, const SeqClass& y, double tol = 0.05, double tail_fraction = 0.5);

/// Frobenius equivalence: the tail ratio log x_i / log y_i stays within
/// [1/bound, bound]. Reports the observed ratio range.
struct FrobeniusReport {
  bool equivalent = false;
  double ratio_lo = 0;
  double ratio_hi = 0;
};
FrobeniusReport frob_equivalent(const SeqClass& x, const SeqClass& y, double bound = 16, double tail_fraction = 0.5);

/// (|log x_i| + |log y_i|) / max(|log x_i|, |log y_i|) per index; every value
/// lies in [1, 2]. Indices where both logs vanish give 1.
std::vector<double> min_product_ratio(const SeqClass& x, const SeqClass& y);

}  // namespace mahler
