#pragma once

#include <cstdint>
#include <vector>

namespace depthlab {

/// GF(3^k) with elements encoded as integers in [0, 3^k): base-3 digits are
/// the coefficients of the residue polynomial, low degree first.  Addition is
/// digitwise mod 3; multiplication goes through log/antilog tables over a
/// primitive element, so construction is O(q) and all operations O(1).
class GF3 {
public:
    explicit GF3(int k);

    int k() const { return k_; }
    int q() const { return q_; }
    /// The monic irreducible modulus, as its own base-3 encoding (degree k).
    long long modulus() const { return modulus_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long e) const;
    /// Frobenius a -> a^3.
    int frobenius(int a) const { return frob_[a]; }
    /// A fixed primitive element (the base of the log tables).
    int generator() const { return gen_; }

private:
    int k_, q_, gen_ = 0;
    long long modulus_ = 0;
    std::vector<int> log_, exp_, frob_;
};

}  // namespace depthlab
