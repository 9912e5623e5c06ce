#include "mahler/approx/classify.hpp"

#include "mahler/error.hpp"
#include "mahler/measures/measures.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mahler {

std::vector<std::int64_t> geometric_schedule(std::int64_t base, int count) {
  if (base < 2 || count < 1) throw DomainError("schedule needs base >= 2 and count >= 1");
  std::vector<std::int64_t> s;
  std::int64_t h = 1;
  for (int i = 0; i < count; ++i) {
    if (h > (std::int64_t{1} << 50) / base) throw DomainError("schedule exceeds 2^50");
    h *= base;
    s.push_back(h);
  }
  return s;
}

std::vector<std::int64_t> schedule_up_to(std::int64_t base, std::int64_t H_max) {
  if (base < 2) throw DomainError("schedule base must be >= 2");
  std::vector<std::int64_t> s;
  for (std::int64_t h = base; h <= H_max; h *= base) {
    s.push_back(h);
    if (h > H_max / base) break;
  }
  return s;
}

ExponentTable exponent_table(const RealConstant& theta, int d_max, const std::vector<std::int64_t>& schedule,
                             const SearchOptions& opt) {
  if (d_max < 1) throw DomainError("exponent table needs d_max >= 1");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1]) throw DomainError("height schedule must be strictly increasing");
  ExponentTable t;
  for (int d = 1; d <= d_max; ++d) {
    DegreeEstimate est;
    est.d = d;
    est.e_max = -std::numeric_limits<double>::infinity();
    int last_record = -1;
    for (auto H : schedule) {
      TableRow row;
      row.d = d;
      row.H = H;
      if (opt.budget && search_size(d, H) > static_cast<double>(opt.budget)) {
        row.error = "budget";
      } else {
        try {
          row.record = best_poly(theta, d, H, opt);
        } catch (const PrecisionExhausted& e) {
          row.error = std::string("precision: ") + e.what();
        }
      }
      if (row.record && row.record->exponent) {
        const double e = row.record->exponent->mid_double();
        if (e > est.e_max) {
          est.e_max = e;
          est.argmax_H = H;
          last_record = est.points;
        }
        ++est.points;
      }
      t.rows.push_back(std::move(row));
    }
    est.rising_tail = est.points >= 2 && last_record >= est.points - 2;
    if (est.points == 0) est.e_max = 0;
    t.degrees.push_back(est);
  }
  return t;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::a_certified: return "A-certified";
    case Verdict::a_suspected: return "A-suspected";
    case Verdict::s_suspected: return "S-suspected";
    case Verdict::t_suspected: return "T-suspected";
    case Verdict::u_suspected: return "U-suspected";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Defining polynomial of an algebraic constant, primitive.
std::optional<IntPoly> defining_polynomial(const RealConstant& c) {
  if (c.is_rational())
    return primitive_part(IntPoly::linear(c.rational.get_den(), -c.rational.get_num()));
  if (c.is_quadratic()) return primitive_part(IntPoly(std::vector<mpz_class>{c.c, c.b, c.a}));
  return std::nullopt;
}

}  // namespace

ClassReport classify_mahler(const RealConstant& theta, const ClassifyOptions& opt) {
  if (opt.d_max < 1 || opt.H_max < 2 || opt.base < 2 || opt.search_budget <= 0)
    throw DomainError("classify: budgets must be positive");
  ClassReport r;
  r.theta = theta;
  r.options = opt;
  SearchOptions so;
  so.threads = opt.threads;
  so.budget = static_cast<std::uint64_t>(opt.search_budget);
  r.table = exponent_table(theta, opt.d_max, schedule_up_to(opt.base, opt.H_max), so);

  for (const auto& est : r.table.degrees) r.e_of_d.push_back(est.e_max);
  r.e_global = r.e_of_d.empty() ? 0 : *std::max_element(r.e_of_d.begin(), r.e_of_d.end());

  // Exact witnesses: the constant's own defining polynomial, or an exact
  // zero met during the search.
  if (auto w = defining_polynomial(theta); w && w->degree() <= opt.d_max) {
    r.witness = *w;
  } else {
    for (const auto& row : r.table.rows)
      if (row.record && row.record->zero_witness && row.record->zero_exact) {
        const IntPoly w2 = primitive_part(*row.record->zero_witness);
        if (!r.witness || w2.degree() < r.witness->degree()) r.witness = w2;
      }
  }
  if (r.witness) {
    r.verdict = Verdict::a_certified;
    r.type_estimate = std::make_pair(double(r.witness->degree()), double(r.witness->degree()));
    r.note = "exact vanishing witness";
    return r;
  }

  for (const auto& est : r.table.degrees)
    if (est.points >= opt.min_points && est.e_max > opt.divergence_threshold && est.rising_tail) {
      r.d_frak = est.d;
      break;
    }

  bool zero_candidate = false;
  for (const auto& row : r.table.rows)
    if (row.record && row.record->zero_witness && !row.record->zero_exact) zero_candidate = true;

  std::vector<const DegreeEstimate*> usable;
  for (const auto& est : r.table.degrees)
    if (est.points >= opt.min_points) usable.push_back(&est);

  if (r.d_frak) {
    r.verdict = Verdict::u_suspected;
    r.type_estimate = std::make_pair(double(*r.d_frak), double(*r.d_frak));
    r.note = "exponent above the divergence threshold with a record at the end of the schedule";
  } else if (zero_candidate) {
    r.verdict = Verdict::a_suspected;
    r.note = "a candidate enclosed zero at the precision cap";
  } else if (usable.empty()) {
    r.verdict = Verdict::inconclusive;
    r.note = "too few schedule points within the budget";
  } else {
    for (const auto* est : usable)
      if (est->d >= 2 && est->e_max > 0) r.t_of_d.push_back(1 + std::log(est->e_max) / std::log(double(est->d)));
    bool growing = usable.size() >= 2;
    for (std::size_t i = 1; i < usable.size(); ++i)
      if (!(usable[i]->e_max > usable[i - 1]->e_max)) growing = false;
    if (growing && usable.back()->e_max >= 2 * usable.front()->e_max && !r.t_of_d.empty()) {
      r.verdict = Verdict::t_suspected;
      const auto [lo, hi] = std::minmax_element(r.t_of_d.begin(), r.t_of_d.end());
      if (std::isfinite(*lo) && std::isfinite(*hi)) r.type_estimate = std::make_pair(*lo, *hi);
      r.note = "exponent grows with the degree";
    } else {
      r.verdict = Verdict::s_suspected;
      r.type_estimate = std::make_pair(r.e_global, r.e_global);
      r.note = "exponents bounded over the sampled degrees";
    }
  }
  return r;
}

std::vector<SpectraCell> spectra_grid(const RealConstant& theta, int d, std::int64_t H_max,
                                      const std::vector<std::pair<double, double>>& grid, std::int64_t base,
                                      const SearchOptions& opt) {
  for (const auto& [a, b] : grid)
    if (!(a > 0) || !(b > 0)) throw DomainError("spectra: exponents must be positive");
  const ExponentTable t = exponent_table(theta, d, schedule_up_to(base, H_max), opt);

  struct Witness {
    IntPoly f;
    double log_h;
    double log_decay;  // log(|f(theta)|^(1/d)); -inf for an exact zero
  };
  std::vector<Witness> ws;
  for (const auto& row : t.rows) {
    if (row.d != d || !row.record) continue;
    const auto& rec = *row.record;
    ws.push_back({rec.f, std::log(height(rec.f).get_d()), rec.value.log().mid_double() / d});
    if (rec.zero_witness && rec.zero_exact)
      ws.push_back({*rec.zero_witness, std::log(height(*rec.zero_witness).get_d()),
                    -std::numeric_limits<double>::infinity()});
  }
  const double L = std::log(static_cast<double>(H_max));
  std::vector<SpectraCell> out;
  for (const auto& [a, b] : grid) {
    SpectraCell c;
    c.a = a;
    c.b = b;
    for (const auto& w : ws)
      if (w.log_h <= a * L && w.log_decay <= -b * L) {
        c.attainable = true;
        c.witness = w.f;
        break;
      }
    out.push_back(std::move(c));
  }
  return out;
}

std::string class_report_json(const ClassReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["theta"] = r.theta.spec;
  ordered_json knobs;
  knobs["d_max"] = r.options.d_max;
  knobs["H_max"] = r.options.H_max;
  knobs["schedule_base"] = r.options.base;
  knobs["divergence_threshold"] = r.options.divergence_threshold;
  knobs["search_budget"] = r.options.search_budget;
  knobs["min_points"] = r.options.min_points;
  j["options"] = knobs;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.table.rows) {
    ordered_json x;
    x["d"] = row.d;
    x["H"] = row.H;
    if (row.record) {
      const auto& rec = *row.record;
      x["coeffs"] = ordered_json::parse(poly_json(rec.f));
      x["abs_value"] = ordered_json::parse(interval_json(rec.value, 17));
      if (rec.exponent)
        x["exponent"] = ordered_json::parse(interval_json(*rec.exponent, 17));
      else
        x["exponent"] = nullptr;
      x["ties"] = rec.ties;
      x["zero_excluded"] = rec.exact_zero_excluded;
    } else {
      x["error"] = row.error;
    }
    rows.push_back(x);
  }
  j["table"] = rows;
  j["e_of_d"] = r.e_of_d;
  j["e_global"] = r.e_global;
  if (r.d_frak)
    j["d_frak"] = *r.d_frak;
  else
    j["d_frak"] = "none observed";
  j["verdict"] = to_string(r.verdict);
  if (r.type_estimate)
    j["type_estimate"] = {r.type_estimate->first, r.type_estimate->second};
  else if (r.verdict == Verdict::t_suspected)
    j["type_estimate"] = "divergent";
  else
    j["type_estimate"] = nullptr;
  if (!r.t_of_d.empty()) j["t_of_d"] = r.t_of_d;
  if (r.witness)
    j["witness"] = poly_format(*r.witness);
  else
    j["witness"] = nullptr;
  j["note"] = r.note;
  return j.dump(2);
}

}  // namespace mahler
