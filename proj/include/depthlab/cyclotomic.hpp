#pragma once

#include <map>
#include <vector>

#include "depthlab/numeric.hpp"

namespace depthlab {

/// Exact element of Q(zeta_N).  Internally a sparse sum of rational multiples
/// of powers of zeta_N; equality and zero tests reduce modulo the N-th
/// cyclotomic polynomial.  No floating point anywhere.
class Cyclotomic {
public:
    Cyclotomic() : n_(1) {}
    explicit Cyclotomic(int conductor, const Rational& constant = Rational(0));
    static Cyclotomic zeta_power(int conductor, long long k, const Rational& coeff = Rational(1));

    int conductor() const { return n_; }

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator*=(const Rational& s);
    Cyclotomic operator*(const Rational& s) const;

    /// Complex conjugation, zeta -> zeta^{N-1}.
    Cyclotomic conj() const;

    bool is_zero() const;
    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    bool is_rational() const;
    /// Throws InconsistencyError unless the value is rational.
    Rational rational_value() const;

    /// Coefficients on the power basis 1, zeta, ..., zeta^{phi(N)-1}.
    std::vector<Rational> basis_coeffs() const;

    /// Exact embedding into Q(zeta_M) for conductor() | M.
    Cyclotomic embedded(int new_conductor) const;

    static int phi(int n);

private:
    void compact();

    int n_;
    std::map<long long, Rational> terms_;  // exponent mod n -> coefficient
};

/// lcm helper for conductors.
int lcm_int(int a, int b);

}  // namespace depthlab
