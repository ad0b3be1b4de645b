#include "bsk/fourier_motzkin.hpp"

#include <map>

#include "bsk/errors.hpp"

namespace bsk {

namespace {

using Row = LinearInequality;

// Scale so the first nonzero coefficient has absolute value 1, then keep the
// tightest rhs per coefficient vector. Returns false on a contradiction
// 0 <= negative.
bool normalize_into(std::map<std::vector<mpq_class>, mpq_class>& rows, Row row) {
  std::size_t lead = 0;
  while (lead < row.coeffs.size() && sgn(row.coeffs[lead]) == 0) ++lead;
  if (lead == row.coeffs.size()) return sgn(row.rhs) >= 0;
  mpq_class scale = abs(row.coeffs[lead]);
  if (scale != 1) {
    for (auto& c : row.coeffs) c /= scale;
    row.rhs /= scale;
  }
  auto [it, inserted] = rows.try_emplace(std::move(row.coeffs), row.rhs);
  if (!inserted && row.rhs < it->second) it->second = row.rhs;
  return true;
}

}  // namespace

std::optional<std::vector<mpq_class>> fourier_motzkin_solve(const std::vector<LinearInequality>& system,
                                                            std::size_t nvars, std::size_t max_rows) {
  std::vector<std::vector<Row>> stages;
  std::vector<std::size_t> eliminated;
  std::vector<bool> alive(nvars, true);

  {
    std::map<std::vector<mpq_class>, mpq_class> rows;
    for (const auto& r : system) {
      if (r.coeffs.size() != nvars) throw InvalidArgument("inequality has wrong arity");
      if (!normalize_into(rows, r)) return std::nullopt;
    }
    std::vector<Row> current;
    for (auto& [c, rhs] : rows) current.push_back(Row{c, rhs});
    stages.push_back(std::move(current));
  }

  for (std::size_t step = 0; step < nvars; ++step) {
    const auto& current = stages.back();
    // pick the live variable with the fewest generated rows
    std::size_t var = nvars;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!alive[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : current) {
        int s = sgn(r.coeffs[v]);
        pos += s > 0;
        neg += s < 0;
      }
      std::size_t cost = pos * neg;
      if (var == nvars || cost < best_cost) {
        var = v;
        best_cost = cost;
      }
    }
    alive[var] = false;
    eliminated.push_back(var);

    std::vector<const Row*> upper, lower;
    std::map<std::vector<mpq_class>, mpq_class> rows;
    for (const auto& r : current) {
      int s = sgn(r.coeffs[var]);
      if (s > 0) {
        upper.push_back(&r);
      } else if (s < 0) {
        lower.push_back(&r);
      } else if (!normalize_into(rows, r)) {
        return std::nullopt;
      }
    }
    for (const Row* u : upper) {
      for (const Row* l : lower) {
        // u: a x_v + ... <= b (a > 0); l: -c x_v + ... <= d (c > 0)
        mpq_class a = u->coeffs[var], c = -l->coeffs[var];
        Row combined{std::vector<mpq_class>(nvars), c * u->rhs + a * l->rhs};
        for (std::size_t k = 0; k < nvars; ++k) combined.coeffs[k] = c * u->coeffs[k] + a * l->coeffs[k];
        combined.coeffs[var] = 0;
        if (!normalize_into(rows, std::move(combined))) return std::nullopt;
      }
      if (rows.size() > max_rows) {
        throw BudgetError("Fourier-Motzkin system exceeded " + std::to_string(max_rows) + " rows", rows.size());
      }
    }
    std::vector<Row> next;
    next.reserve(rows.size());
    for (auto& [c, rhs] : rows) next.push_back(Row{c, rhs});
    stages.push_back(std::move(next));
  }

  // stages.back() has no variables left and every row was consistent.
  std::vector<mpq_class> x(nvars);
  for (std::size_t step = nvars; step-- > 0;) {
    const std::size_t var = eliminated[step];
    std::optional<mpq_class> lo, hi;
    for (const auto& r : stages[step]) {
      int s = sgn(r.coeffs[var]);
      if (s == 0) continue;
      mpq_class rest = r.rhs;
      for (std::size_t k = 0; k < nvars; ++k) {
        if (k != var && sgn(r.coeffs[k]) != 0) rest -= r.coeffs[k] * x[k];
      }
      mpq_class bound = rest / r.coeffs[var];
      if (s > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi && *lo > *hi) throw InternalError("Fourier-Motzkin back-substitution found empty interval");
    x[var] = lo ? *lo : (hi ? *hi : mpq_class(0));
  }
  return x;
}

}  // namespace bsk
