#include "depthlab/certificates.hpp"

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

// m = 3^n from q = 3^(2n+1); throws for anything else.
long long ree_m(long long q) {
    long long p = q, e = 0;
    while (p > 1 && p % 3 == 0) {
        p /= 3;
        ++e;
    }
    if (p != 1 || q < 3 || e % 2 == 0) throw InputError("q must be 3^(2n+1)");
    long long m = 1;
    for (long long i = 0; i < (e - 1) / 2; ++i) m *= 3;
    return m;
}

bool is_prime_ll(long long a) {
    if (a < 2) return false;
    for (long long d = 2; d * d <= a; ++d)
        if (a % d == 0) return false;
    return true;
}

// checks q = q0^a with a an odd prime
long long power_degree(long long q, long long q0) {
    if (q0 < 3) throw InputError("q0 must be at least 3");
    long long a = 0;
    BigInt p = 1;
    while (p < q) {
        p *= q0;
        ++a;
    }
    if (p != q || a % 2 == 0 || !is_prime_ll(a))
        throw InputError("q must be q0^a with a an odd prime");
    return a;
}

BigInt bp(long long base, unsigned e) { return big_pow(BigInt(base), e); }

bool chain_conditions(long long q, long long q0) {
    return q0 <= q / 9 && q0 * q0 <= q / 3 && bp(q0, 3) <= q;
}

}  // namespace

BoundCheck check_b1_bound(long long q) {
    BoundCheck c;
    c.name = "b1";
    c.q = q;
    c.m = ree_m(q);
    c.formula = "q^3(q^3+1)(q-1) - (q+1+3m)^2(q-1)(q+1)q - 2(q+1+3m)^2 q^2 > 0";
    BigInt Q = q, s = Q + 1 + 3 * c.m;
    c.lhs = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1) - s * s * (Q - 1) * (Q + 1) * Q -
            2 * s * s * Q * Q;
    c.rhs = 0;
    c.holds = c.lhs > c.rhs;
    c.in_domain = q >= 27;
    return c;
}

BoundCheck check_ngm_bound(long long q) {
    BoundCheck c;
    c.name = "ngm";
    c.q = q;
    c.m = ree_m(q);
    c.formula = "q^3(q^3+1)(q-1) - 6(q+1) - 2q^2(q+1)^2 - (q+4)^2 q(q-1)(q+1) > 1";
    BigInt Q = q;
    c.lhs = Q * Q * Q * (Q * Q * Q + 1) * (Q - 1) - 6 * (Q + 1) - 2 * Q * Q * (Q + 1) * (Q + 1) -
            (Q + 4) * (Q + 4) * Q * (Q - 1) * (Q + 1);
    c.rhs = 1;
    c.holds = c.lhs > c.rhs;
    c.in_domain = q >= 27;
    return c;
}

BoundCheck check_cgi_count_bound(long long q, long long q0) {
    BoundCheck c;
    c.name = "cgi";
    c.q = q;
    c.q0 = q0;
    c.m = ree_m(q);
    c.m0 = ree_m(q0);
    power_degree(q, q0);
    c.formula =
        "A - 1/2 q0^2(q0-1)^2(q0+1)^2 >= (8/9 q^3 - 4q^2 + q)/2 > 0, "
        "q0 <= q/9, q0^2 <= q/3, q0^3 <= q";
    BigInt Q = q, Q0 = q0;
    BigInt two_a = Q * (Q - 1) * (Q + 1) - Q * bp(q0, 4) - 2 * Q * bp(q0, 3) - 3 * Q * Q0 * Q0 +
                   2 * Q * Q0 + 2 * Q + 2 * bp(q0, 5) + 3 * bp(q0, 4) - 2 * bp(q0, 3) - Q0 * Q0;
    if (two_a % 2 != 0) throw InconsistencyError("2A is odd");
    // everything times 18 to stay integral
    BigInt half_term = Q0 * Q0 * (Q0 - 1) * (Q0 - 1) * (Q0 + 1) * (Q0 + 1);
    c.lhs = 9 * two_a - 9 * half_term;
    c.rhs = 8 * Q * Q * Q - 36 * Q * Q + 9 * Q;
    c.holds = c.lhs >= c.rhs && c.rhs > 0 && chain_conditions(q, q0);
    c.in_domain = q >= 27;
    return c;
}

BoundCheck check_g0_final_bound(long long q, long long q0) {
    BoundCheck c;
    c.name = "g0_final";
    c.q = q;
    c.q0 = q0;
    c.m = ree_m(q);
    c.m0 = ree_m(q0);
    power_degree(q, q0);
    c.formula = "20(q-1)q^5 < (q-1)q^3(q^3+1), equivalently 20q^2 < q^3+1";
    BigInt Q = q;
    c.lhs = 20 * (Q - 1) * bp(q, 5);
    c.rhs = (Q - 1) * Q * Q * Q * (Q * Q * Q + 1);
    bool identity = 20 * Q * Q < Q * Q * Q + 1;
    c.holds = c.lhs < c.rhs && identity && chain_conditions(q, q0);
    c.in_domain = q >= 27;
    return c;
}

BoundCheck check_r3_bound(long long q) {
    BoundCheck c;
    c.name = "r3";
    c.q = q;
    c.m = ree_m(q);
    c.formula = "28^2 q^3(q-1) + 63^2 (q^3-q) + 36^2*6(q+3m+1) < (q-1)q^3(q^3+1)";
    BigInt Q = q;
    c.lhs = 28 * 28 * Q * Q * Q * (Q - 1) + 63 * 63 * (Q * Q * Q - Q) +
            36 * 36 * 6 * (Q + 3 * c.m + 1);
    c.rhs = (Q - 1) * Q * Q * Q * (Q * Q * Q + 1);
    c.holds = c.lhs < c.rhs;
    c.in_domain = q >= 27;
    return c;
}

std::vector<BoundCheck> cert_sweep(int n_max) {
    std::vector<BoundCheck> out;
    for (int n = 1; n <= n_max; ++n) {
        BigInt qb = big_pow(BigInt(3), static_cast<unsigned>(2 * n + 1));
        long long q = qb.convert_to<long long>();
        out.push_back(check_b1_bound(q));
        out.push_back(check_ngm_bound(q));
        out.push_back(check_r3_bound(q));
        // all admissible q0 with q = q0^a, a odd prime
        int e = 2 * n + 1;
        for (int e0 = 1; e0 < e; e0 += 2) {
            if (e % e0 != 0 || !is_prime_ll(e / e0)) continue;
            long long q0 = big_pow(BigInt(3), static_cast<unsigned>(e0)).convert_to<long long>();
            out.push_back(check_cgi_count_bound(q, q0));
            out.push_back(check_g0_final_bound(q, q0));
        }
    }
    return out;
}

}  // namespace depthlab
