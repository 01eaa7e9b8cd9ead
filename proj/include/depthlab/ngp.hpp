#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/cyclotomic.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/report.hpp"

namespace depthlab {

/// Parameters of R(q), q = 3^(2n+1) with n >= 1.
struct ReeParams {
    int n = 1;
    long long m = 3;          // 3^n
    long long q = 27;         // 3 m^2
    long long c = 13;         // (q-1)/2, the order of epsilon
    int conductor = 156;      // lcm(12, c)
    long long num_classes = 34;  // q + 7

    static ReeParams from_n(int n);
    long long group_order() const { return q * q * q * (q - 1); }
};

/// Element of Z[zeta_12] on the basis 1, z, z^2, z^3 (z^4 = z^2 - 1).
struct Z12 {
    long long a = 0, b = 0, c = 0, d = 0;
    friend Z12 operator+(const Z12& x, const Z12& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Z12 operator-(const Z12& x, const Z12& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    Z12 conj() const { return {a + c, b, -c, -b - d}; }
    bool operator==(const Z12&) const = default;
};

Z12 z12_mul(const Z12& x, const Z12& y);

/// Table value: (num / 2) * zeta_c^cexp.  Every entry of the parametrized
/// table and of the induced rows is a single such term.
struct NgpVal {
    Z12 num;            // coordinates scaled by 2
    long long cexp = 0;  // exponent of zeta_c, reduced mod c
    NgpVal conj(long long c) const { return {num.conj(), cexp ? c - cexp : 0}; }
};

/// The q+7 classes in fixed order:
/// 1, X, Y, T, T^-1, YT, YT^-1, JT, JT^-1, R^1..R^A, JR^1..JR^A, J
/// with A = (q-3)/2.
struct NgpTable {
    ReeParams params;
    std::vector<std::string> class_names;
    std::vector<BigInt> class_sizes;
    std::vector<std::string> row_names;  // 1, Delta, psi+_b, psi-_b, alpha_1..8
    std::vector<std::vector<NgpVal>> rows;

    std::size_t idx_r(long long a) const;   // class R^a
    std::size_t idx_jr(long long a) const;  // class JR^a
    std::size_t idx_j() const;              // class J
};

NgpTable build_ngp_table(const ReeParams& params);

using NgpCheck = CheckResult;

/// Both orthogonality relations, exact.
std::vector<NgpCheck> verify_ngp_orthogonality(const NgpTable& table, Exec exec = Exec::Parallel);

/// Values of 1^G, Delta^G, (psi_b^+)^G, (psi_b^-)^G restricted to N_G(P);
/// row order matches the first q-1 rows of the table.  Trusted data:
/// deriving them needs G itself.
std::vector<std::vector<NgpVal>> ngp_induced_rows(const ReeParams& params);

/// Decompositions of the induced rows into irreducibles, checked two ways.
struct DecompositionCert {
    ReeParams params;
    /// coeffs[r][j]: multiplicity of table row j in induced row r.
    std::vector<std::vector<long long>> coeffs;
    std::vector<NgpCheck> checks;
    bool pass = true;
};

DecompositionCert verify_ngp_decompositions(const ReeParams& params, Exec exec = Exec::Parallel);

/// The depth-5 certificate: all distances <= 2 from the derived relation
/// edges, and m(1_G) = 2 from the exact zero of Delta in 1^G|_H.
struct NgpDepthCert {
    int depth = 0;
    int max_distance = 0;
    int m_one_g = 0;
    std::vector<NgpCheck> checks;
    bool pass = true;
};

NgpDepthCert ngp_depth_certificate(const ReeParams& params, Exec exec = Exec::Parallel);

/// Exact rendering of a table value in Q(zeta_conductor).
Cyclotomic ngp_value_to_cyclotomic(const ReeParams& params, const NgpVal& v);

}  // namespace depthlab
