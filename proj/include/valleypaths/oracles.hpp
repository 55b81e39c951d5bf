#pragma once

#include <string>
#include <vector>

#include "valleypaths/polynomial.hpp"
#include "valleypaths/weights.hpp"

namespace valleypaths {

// Named sequences: catalan, fibonacci (F0 = 0), motzkin_ab, schroder_large,
// schroder_small, narayana, chebyshev_u, delannoy, fuss (param r).
// Parameters a, b, q, t may be bound to values or left as "sym".
Polynomial oracle(const std::string& name, long n, const ParamMap& params = {});
const std::vector<std::string>& oracle_names();

// Closed-form V_n for the specialised weight systems. Boundary values V_0 = 1
// and V_1 = 0 are returned where the formula itself starts later.
Polynomial formula_vn(const std::string& name, long n, const ParamMap& params = {});
const std::vector<std::string>& formula_names();

// Total number of H steps lying on the axis over all Delannoy paths of semilength n.
Integer delannoy_hstep_count(int n);

Integer fibonacci(long k);
Integer delannoy_number(long n);
// Sum_{i=0}^{n} D_i D_{n-i}
Integer delannoy_convolution(long n);
// U_n evaluated at an arbitrary polynomial argument by the three-term recurrence.
Polynomial chebyshev_u(long n, const Polynomial& arg);

}  // namespace valleypaths
