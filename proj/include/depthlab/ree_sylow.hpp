#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/gf3n.hpp"
#include "depthlab/parallel.hpp"
#include "depthlab/report.hpp"

namespace depthlab {

/// Element of the Sylow 3-subgroup P of R(q) in triple coordinates.
struct Triple {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const Triple&) const = default;
};

/// P as GF(q)^3 with the twisted product, q = 3^(2n+1).
class PModel {
public:
    explicit PModel(int n);

    int n() const { return n_; }
    int m() const { return m_; }  // 3^n
    int q() const { return field_.q(); }
    const GF3& field() const { return field_; }

    /// sigma(a) = a^(3^(n+1)), so sigma^2 is the cube map.
    int sigma(int a) const;

    Triple mul(const Triple& a, const Triple& b) const;
    /// Closed-form inverse: (-a, -b + a*sigma(a), -c).
    Triple inv(const Triple& a) const;
    /// Closed-form conjugation h^g.
    Triple conj_closed(const Triple& h, const Triple& g) const;
    /// Definitional conjugation g^-1 h g.
    Triple conj(const Triple& h, const Triple& g) const;

    bool in_center(const Triple& t) const { return t.x == 0 && t.y == 0; }
    bool in_derived(const Triple& t) const { return t.x == 0; }
    int element_order(const Triple& t) const;

    std::size_t size() const;  // q^3
    Triple at(std::size_t index) const;
    std::size_t index_of(const Triple& t) const;

private:
    int n_, m_;
    GF3 field_;
    long long sigma_exp_;
};

/// Diagonal action of w in GF(q)^* on P:
/// w . (x, y, z) = (w x, w^(sigma+1) y, w^(sigma+2) z).
struct WAction {
    Triple apply(const PModel& p, int w, const Triple& t) const;
};

using SylowReport = CheckReport;

/// Group laws, P' and Z(P) structure, order-9 law; exhaustive for q = 3,
/// exhaustive on P' plus seeded samples for q = 27.
SylowReport verify_p_structure(int n, bool exhaustive, std::uint64_t seed,
                               std::size_t samples = 100000, Exec exec = Exec::Parallel);

/// Closed forms for inverse and conjugation against the definitional
/// computation; exhaustive for q = 3, sampled for q = 27.
SylowReport verify_closed_forms(int n, std::uint64_t seed, std::size_t samples = 100000,
                                Exec exec = Exec::Parallel);

/// C_P(p) = P' for p in P' \ Z(P).
SylowReport verify_derived_centralizer(int n, std::uint64_t seed, Exec exec = Exec::Parallel);

/// Orbit structure of Z(P), P'/Z(P) and P/P' under the default WAction.
SylowReport verify_w_orbits(int n, std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace depthlab
