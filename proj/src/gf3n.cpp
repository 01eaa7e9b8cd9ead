#include "depthlab/gf3n.hpp"

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

using Poly = std::vector<int>;  // coefficients mod 3, low degree first

int poly_deg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& f) {
    int df = poly_deg(f);
    for (int i = poly_deg(a); i >= df; i = poly_deg(a)) {
        int c = a[i];  // f monic
        for (int j = 0; j <= df; ++j) a[i - df + j] = ((a[i - df + j] - c * f[j]) % 3 + 3) % 3;
    }
    a.resize(df);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
    return poly_mod(std::move(r), f);
}

Poly poly_powmod(Poly base, long long e, const Poly& f) {
    Poly r(poly_deg(f), 0);
    r[0] = 1;
    base = poly_mod(std::move(base), f);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f);
        base = poly_mulmod(base, base, f);
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const Poly& f, int k) {
    Poly x(2, 0);
    x[1] = 1;
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= 3;
    if (poly_powmod(x, qk, f) != poly_mod(x, f)) return false;
    for (int p = 2; p <= k; ++p) {
        if (k % p) continue;
        long long qd = 1;
        for (int i = 0; i < k / p; ++i) qd *= 3;
        if (poly_powmod(x, qd, f) == poly_mod(x, f)) return false;
    }
    return true;
}

Poly decode(long long v, int len) {
    Poly p(len, 0);
    for (int i = 0; i < len; ++i) {
        p[i] = v % 3;
        v /= 3;
    }
    return p;
}

long long encode(const Poly& p) {
    long long v = 0, b = 1;
    for (int c : p) {
        v += c * b;
        b *= 3;
    }
    return v;
}

Poly pick_modulus(int k) {
    if (k == 1) return {0, 1};           // x
    if (k == 3) return {1, 2, 0, 1};     // x^3 - x + 1, fixed for reproducibility
    long long qk = 1;
    for (int i = 0; i < k; ++i) qk *= 3;
    for (long long low = 1; low < qk; ++low) {
        Poly f = decode(low, k + 1);
        f[k] = 1;
        if (is_irreducible(f, k)) return f;
    }
    throw InconsistencyError("no irreducible polynomial found");
}

}  // namespace

GF3::GF3(int k) : k_(k) {
    if (k < 1 || k > 13) throw InputError("GF3: degree out of range");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= 3;
    Poly f = pick_modulus(k);
    modulus_ = encode(f);

    // multiplication closure for table building
    auto mul_poly = [&](int a, int b) {
        return static_cast<int>(encode(poly_mulmod(decode(a, k), decode(b, k), f)));
    };

    // primitive element: order q-1, verified at (q-1)/p for each prime p
    std::vector<int> primes;
    {
        int m = q_ - 1;
        for (int d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
    }
    auto pow_poly = [&](int a, int e) {
        int r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    for (int g = 2; g < q_; ++g) {
        bool primitive = true;
        for (int p : primes)
            if (pow_poly(g, (q_ - 1) / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0 && q_ > 2) throw InconsistencyError("no primitive element found");

    exp_.resize(q_ - 1);
    log_.assign(q_, -1);
    int cur = 1;
    for (int i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_poly(cur, gen_);
    }
    if (cur != 1) throw InconsistencyError("generator order mismatch");

    frob_.resize(q_);
    for (int a = 0; a < q_; ++a) frob_[a] = mul_poly(a, mul_poly(a, a));
}

int GF3::add(int a, int b) const {
    int r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % 3 + b % 3) % 3) * base;
        a /= 3;
        b /= 3;
        base *= 3;
    }
    return r;
}

int GF3::neg(int a) const {
    int r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((3 - a % 3) % 3) * base;
        a /= 3;
        base *= 3;
    }
    return r;
}

int GF3::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int GF3::inv(int a) const {
    if (a == 0) throw InputError("GF3: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GF3::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw InputError("GF3: negative power of zero");
        return 0;
    }
    long long r = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[r];
}

}  // namespace depthlab
