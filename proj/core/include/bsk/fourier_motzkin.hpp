#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace bsk {

// coeffs · x <= rhs
struct LinearInequality {
  std::vector<mpq_class> coeffs;
  mpq_class rhs;
};

// Exact Fourier–Motzkin elimination over the rationals. Returns a feasible
// point reconstructed by back-substitution (each variable set to its largest
// lower bound, else its smallest upper bound, else 0), or nullopt when the
// system is infeasible. Throws BudgetError when an intermediate system grows
// past `max_rows`.
std::optional<std::vector<mpq_class>> fourier_motzkin_solve(const std::vector<LinearInequality>& system,
                                                            std::size_t nvars,
                                                            std::size_t max_rows = 100000);

}  // namespace bsk
