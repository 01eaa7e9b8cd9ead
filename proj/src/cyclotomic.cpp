#include "depthlab/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

using Poly = std::vector<BigInt>;  // coefficient list, low degree first

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Exact division, remainder must vanish.
Poly poly_divide(const Poly& num, const Poly& den) {
    Poly r = num;
    int dn = poly_degree(r), dd = poly_degree(den);
    Poly q(dn - dd + 1, BigInt(0));
    const BigInt& lead = den[dd];
    for (int i = dn; i >= dd; --i) {
        if (r[i] == 0) continue;
        BigInt c = r[i] / lead;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
    }
    if (poly_degree(r) >= 0) throw InconsistencyError("cyclotomic polynomial division not exact");
    return q;
}

Poly cyclotomic_poly(int n, std::map<int, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1, BigInt(0));  // x^n - 1
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide(p, cyclotomic_poly(d, cache));
    cache[n] = p;
    return p;
}

struct Context {
    int n = 1;
    int phi = 1;
    Poly phi_poly;                        // monic, degree phi
    std::vector<std::vector<BigInt>> pw;  // pw[k] = x^k mod Phi_n, length phi
};

const Context& context(int n) {
    static std::mutex mu;
    static std::unordered_map<int, Context> registry;
    static std::map<int, Poly> poly_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;

    Context ctx;
    ctx.n = n;
    ctx.phi_poly = cyclotomic_poly(n, poly_cache);
    ctx.phi = poly_degree(ctx.phi_poly);
    ctx.pw.resize(n);
    std::vector<BigInt> row(ctx.phi, BigInt(0));
    row[0] = 1;
    ctx.pw[0] = row;
    for (int k = 1; k < n; ++k) {
        // multiply by x, reduce via x^phi = -(lower part of Phi)
        BigInt top = row[ctx.phi - 1];
        for (int i = ctx.phi - 1; i > 0; --i) row[i] = row[i - 1];
        row[0] = 0;
        if (top != 0)
            for (int i = 0; i < ctx.phi; ++i) row[i] -= top * ctx.phi_poly[i];
        ctx.pw[k] = row;
    }
    return registry.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

int Cyclotomic::phi(int n) { return context(n).phi; }

int lcm_int(int a, int b) { return static_cast<int>(std::lcm(a, b)); }

Cyclotomic::Cyclotomic(int conductor, const Rational& constant) : n_(conductor) {
    if (conductor < 1) throw InputError("conductor must be positive");
    if (constant != 0) terms_[0] = constant;
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long long k, const Rational& coeff) {
    Cyclotomic c(conductor);
    if (coeff != 0) {
        long long e = k % conductor;
        if (e < 0) e += conductor;
        c.terms_[e] = coeff;
    }
    return c;
}

void Cyclotomic::compact() {
    if (terms_.size() <= static_cast<std::size_t>(n_)) return;
    auto basis = basis_coeffs();
    terms_.clear();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] != 0) terms_[static_cast<long long>(i)] = basis[i];
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (n_ != rhs.n_) {
        int m = lcm_int(n_, rhs.n_);
        *this = embedded(m);
        return *this += rhs.embedded(m);
    }
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    compact();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic out = *this;
    out += rhs;
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    Cyclotomic out = *this;
    out -= rhs;
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    if (n_ != rhs.n_) {
        int m = lcm_int(n_, rhs.n_);
        return embedded(m) * rhs.embedded(m);
    }
    Cyclotomic out(n_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : rhs.terms_) {
            long long k = (k1 + k2) % n_;
            Rational c = c1 * c2;
            auto [it, inserted] = out.terms_.emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    out.compact();
    return out;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
    Cyclotomic out = *this;
    out *= s;
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(n_);
    for (const auto& [k, c] : terms_) {
        long long e = (n_ - k) % n_;
        auto [it, inserted] = out.terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return out;
}

std::vector<Rational> Cyclotomic::basis_coeffs() const {
    const Context& ctx = context(n_);
    std::vector<Rational> out(ctx.phi, Rational(0));
    for (const auto& [k, c] : terms_) {
        const auto& row = ctx.pw[static_cast<std::size_t>(k)];
        for (int i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) out[i] += c * Rational(row[i]);
    }
    return out;
}

bool Cyclotomic::is_zero() const {
    if (terms_.empty()) return true;
    for (const auto& c : basis_coeffs())
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const { return (*this - rhs).is_zero(); }

bool Cyclotomic::is_rational() const {
    auto basis = basis_coeffs();
    for (std::size_t i = 1; i < basis.size(); ++i)
        if (basis[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    auto basis = basis_coeffs();
    for (std::size_t i = 1; i < basis.size(); ++i)
        if (basis[i] != 0) throw InconsistencyError("cyclotomic value is not rational");
    return basis.empty() ? Rational(0) : basis[0];
}

Cyclotomic Cyclotomic::embedded(int new_conductor) const {
    if (new_conductor == n_) return *this;
    if (new_conductor % n_ != 0)
        throw InputError("embedding requires conductor divisibility");
    long long f = new_conductor / n_;
    Cyclotomic out(new_conductor);
    for (const auto& [k, c] : terms_) out.terms_[k * f] = c;
    return out;
}

}  // namespace depthlab
