#pragma once

#include <string>
#include <vector>

#include "depthlab/numeric.hpp"

namespace depthlab {

/// One counting inequality, evaluated exactly.  `holds` is the raw comparison
/// lhs (cmp) rhs; `in_domain` is false for q = 3, where the inequality is
/// evaluated and reported but never asserted.
struct BoundCheck {
    std::string name;
    long long q = 0;
    long long q0 = 0;  // 0 when the bound has no q0 parameter
    long long m = 0;   // 3^n, q = 3 m^2
    long long m0 = 0;  // 3^n0 when q0 is present
    BigInt lhs, rhs;
    bool holds = false;
    bool in_domain = false;  // q >= 27
    std::string formula;
};

/// q^3(q^3+1)(q-1) - (q+1+3m)^2(q-1)(q+1)q - 2(q+1+3m)^2 q^2 > 0.
BoundCheck check_b1_bound(long long q);

/// q^3(q^3+1)(q-1) - 6(q+1) - 2q^2(q+1)^2 - (q+4)^2 q(q-1)(q+1) > 1.
BoundCheck check_ngm_bound(long long q);

/// With A = [q(q-1)(q+1) - q q0^4 - 2q q0^3 - 3q q0^2 + 2q q0 + 2q
///           + 2 q0^5 + 3 q0^4 - 2 q0^3 - q0^2] / 2:
/// A - (1/2) q0^2 (q0-1)^2 (q0+1)^2 >= (8/9 q^3 - 4 q^2 + q)/2 > 0,
/// together with the chain q0 <= q/9, q0^2 <= q/3, q0^3 <= q.
/// Requires q = q0^a for an odd prime a.
BoundCheck check_cgi_count_bound(long long q, long long q0);

/// 20(q-1)q^5 < (q-1)q^3(q^3+1), the equivalent 20q^2 < q^3+1, and the same
/// chain conditions on q0.  Requires q = q0^a for an odd prime a.
BoundCheck check_g0_final_bound(long long q, long long q0);

/// 28^2 q^3(q-1) + 63^2 (q^3-q) + 36^2 * 6 (q+3m+1) < (q-1)q^3(q^3+1).
BoundCheck check_r3_bound(long long q);

/// All five families over n = 1..n_max, with every admissible q0 for the
/// two-parameter bounds.
std::vector<BoundCheck> cert_sweep(int n_max);

}  // namespace depthlab
