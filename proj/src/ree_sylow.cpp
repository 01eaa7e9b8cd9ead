#include "depthlab/ree_sylow.hpp"

#include <random>
#include <set>
#include <sstream>

#include "depthlab/errors.hpp"

namespace depthlab {

namespace {

std::string show(const Triple& t) {
    std::ostringstream os;
    os << "(" << t.x << "," << t.y << "," << t.z << ")";
    return os.str();
}

std::vector<std::size_t> draw_indices(std::uint64_t seed, std::size_t count, std::size_t bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
    std::vector<std::size_t> out(count);
    for (auto& v : out) v = dist(rng);
    return out;
}

}  // namespace

PModel::PModel(int n) : n_(n), field_(2 * n + 1) {
    if (n < 0) throw InputError("PModel: n must be nonnegative");
    m_ = 1;
    for (int i = 0; i < n; ++i) m_ *= 3;
    sigma_exp_ = 1;
    for (int i = 0; i < n + 1; ++i) sigma_exp_ *= 3;
}

int PModel::sigma(int a) const { return field_.pow(a, sigma_exp_); }

Triple PModel::mul(const Triple& a, const Triple& b) const {
    const GF3& f = field_;
    Triple r;
    r.x = f.add(a.x, b.x);
    r.y = f.add(f.add(a.y, b.y), f.mul(sigma(a.x), b.x));
    r.z = f.add(f.sub(f.add(a.z, b.z), f.mul(a.x, b.y)),
                f.sub(f.mul(a.y, b.x), f.mul(f.mul(a.x, sigma(a.x)), b.x)));
    return r;
}

Triple PModel::inv(const Triple& a) const {
    const GF3& f = field_;
    return {f.neg(a.x), f.sub(f.mul(a.x, sigma(a.x)), a.y), f.neg(a.z)};
}

Triple PModel::conj_closed(const Triple& h, const Triple& g) const {
    const GF3& f = field_;
    const int x = h.x, y = h.y, z = h.z, a = g.x, b = g.y;
    Triple r;
    r.x = x;
    r.y = f.add(y, f.sub(f.mul(sigma(x), a), f.mul(sigma(a), x)));
    r.z = f.sub(f.add(z, f.mul(x, b)), f.mul(y, a));
    r.z = f.sub(r.z, f.mul(f.mul(x, sigma(x)), a));
    r.z = f.add(r.z, f.mul(sigma(x), f.mul(a, a)));
    return r;
}

Triple PModel::conj(const Triple& h, const Triple& g) const { return mul(mul(inv(g), h), g); }

int PModel::element_order(const Triple& t) const {
    Triple cur = t;
    for (int k = 1; k <= 27; ++k) {
        if (cur == Triple{}) return k;
        cur = mul(cur, t);
    }
    throw InconsistencyError("element order exceeds 27 in a 3-group of exponent 9");
}

std::size_t PModel::size() const {
    std::size_t q = field_.q();
    return q * q * q;
}

Triple PModel::at(std::size_t index) const {
    std::size_t q = field_.q();
    return {static_cast<int>(index % q), static_cast<int>((index / q) % q),
            static_cast<int>(index / (q * q))};
}

std::size_t PModel::index_of(const Triple& t) const {
    std::size_t q = field_.q();
    return t.x + q * (t.y + q * static_cast<std::size_t>(t.z));
}

Triple WAction::apply(const PModel& p, int w, const Triple& t) const {
    const GF3& f = p.field();
    int ws = p.sigma(w);
    return {f.mul(w, t.x), f.mul(f.mul(ws, w), t.y), f.mul(f.mul(ws, f.mul(w, w)), t.z)};
}

SylowReport verify_p_structure(int n, bool exhaustive, std::uint64_t seed, std::size_t samples,
                               Exec exec) {
    PModel p(n);
    const std::int64_t N = static_cast<std::int64_t>(p.size());
    SylowReport report;
    const Triple id{};
    // exhaustive element sweeps only up to q = 27 (19683 elements)
    const bool small = p.q() <= 27;

    {
        SweepResult res;
        if (small) {
            res = sweep(N, exec, [&](std::int64_t i) {
                Triple a = p.at(i);
                return p.mul(a, p.inv(a)) == id && p.mul(p.inv(a), a) == id;
            });
        } else {
            auto draws = draw_indices(seed + 4, samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple a = p.at(draws[i]);
                return p.mul(a, p.inv(a)) == id && p.mul(p.inv(a), a) == id;
            });
        }
        report.add({"identity-inverse", res.failures == 0, ""});
    }

    {
        bool full = exhaustive || p.q() == 3;
        SweepResult res;
        if (full && N <= 100) {
            res = sweep(N * N * N, exec, [&](std::int64_t i) {
                Triple a = p.at(i % N), b = p.at((i / N) % N), c = p.at(i / (N * N));
                return p.mul(p.mul(a, b), c) == p.mul(a, p.mul(b, c));
            });
        } else {
            auto draws = draw_indices(seed, 3 * samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple a = p.at(draws[3 * i]), b = p.at(draws[3 * i + 1]),
                       c = p.at(draws[3 * i + 2]);
                return p.mul(p.mul(a, b), c) == p.mul(a, p.mul(b, c));
            });
        }
        report.add({"associativity", res.failures == 0, ""});
    }

    {
        SweepResult res;
        if (p.q() == 3) {
            res = sweep(N * N, exec, [&](std::int64_t i) {
                Triple a = p.at(i % N), b = p.at(i / N);
                return p.in_derived(p.mul(p.mul(p.inv(a), p.inv(b)), p.mul(a, b)));
            });
        } else {
            auto draws = draw_indices(seed + 1, 2 * samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple a = p.at(draws[2 * i]), b = p.at(draws[2 * i + 1]);
                return p.in_derived(p.mul(p.mul(p.inv(a), p.inv(b)), p.mul(a, b)));
            });
        }
        report.add({"commutator-in-derived", res.failures == 0, ""});
    }

    {
        const int q = p.q();
        SweepResult res;
        if (small) {
            res = sweep(static_cast<std::int64_t>(q) * N, exec, [&](std::int64_t i) {
                Triple z{0, 0, static_cast<int>(i % q)};
                Triple a = p.at(i / q);
                return p.mul(z, a) == p.mul(a, z);
            });
        } else {
            auto draws = draw_indices(seed + 5, 2 * samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple z{0, 0, static_cast<int>(draws[2 * i] % p.q())};
                Triple a = p.at(draws[2 * i + 1]);
                return p.mul(z, a) == p.mul(a, z);
            });
        }
        report.add({"center-central", res.failures == 0, ""});
    }

    {
        // P' elementary abelian of order q^2
        const int q = p.q();
        const std::int64_t np = static_cast<std::int64_t>(q) * q;
        auto at_derived = [&](std::int64_t i) {
            return Triple{0, static_cast<int>(i % q), static_cast<int>(i / q)};
        };
        SweepResult res;
        if (small) {
            res = sweep(np * np, exec, [&](std::int64_t i) {
                Triple a = at_derived(i % np), b = at_derived(i / np);
                if (p.mul(a, b) != p.mul(b, a)) return false;
                return a == id || p.element_order(a) == 3;
            });
        } else {
            auto draws = draw_indices(seed + 6, 2 * samples, static_cast<std::size_t>(np));
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple a = at_derived(draws[2 * i]), b = at_derived(draws[2 * i + 1]);
                if (p.mul(a, b) != p.mul(b, a)) return false;
                return a == id || p.element_order(a) == 3;
            });
        }
        report.add({"derived-elementary-abelian", res.failures == 0, ""});
    }

    {
        // order 9 off P', cube in Z(P) \ {1}
        auto check = [&](std::int64_t idx) {
            Triple a = p.at(idx);
            if (p.in_derived(a)) return true;
            if (p.element_order(a) != 9) return false;
            Triple cube = p.mul(p.mul(a, a), a);
            return p.in_center(cube) && cube != id;
        };
        SweepResult res;
        if (small) {
            res = sweep(N, exec, [&](std::int64_t i) { return check(i); });
        } else {
            auto draws = draw_indices(seed + 7, samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec,
                        [&](std::int64_t i) { return check(draws[i]); });
        }
        report.add({"order-9-law", res.failures == 0, ""});
    }
    return report;
}

SylowReport verify_closed_forms(int n, std::uint64_t seed, std::size_t samples, Exec exec) {
    PModel p(n);
    const std::int64_t N = static_cast<std::int64_t>(p.size());
    SylowReport report;

    {
        auto res = sweep(N, exec, [&](std::int64_t i) {
            Triple a = p.at(i);
            Triple v = p.inv(a);
            return p.mul(a, v) == Triple{} && p.mul(v, a) == Triple{};
        });
        report.add({"inverse-closed-form", res.failures == 0,
                    res.failures ? "first failure " + show(p.at(res.first_failure)) : ""});
    }

    {
        SweepResult res;
        if (p.q() == 3) {
            res = sweep(N * N, exec, [&](std::int64_t i) {
                Triple h = p.at(i % N), g = p.at(i / N);
                return p.conj_closed(h, g) == p.conj(h, g);
            });
        } else {
            auto draws = draw_indices(seed, 2 * samples, p.size());
            res = sweep(static_cast<std::int64_t>(samples), exec, [&](std::int64_t i) {
                Triple h = p.at(draws[2 * i]), g = p.at(draws[2 * i + 1]);
                return p.conj_closed(h, g) == p.conj(h, g);
            });
        }
        report.add({"conjugation-closed-form", res.failures == 0, ""});
    }
    return report;
}

SylowReport verify_derived_centralizer(int n, std::uint64_t seed, Exec exec) {
    PModel p(n);
    const int q = p.q();
    const std::int64_t N = static_cast<std::int64_t>(p.size());
    SylowReport report;

    std::vector<Triple> targets;
    if (q == 3) {
        for (int y = 1; y < q; ++y)
            for (int z = 0; z < q; ++z) targets.push_back({0, y, z});
    } else {
        auto draws = draw_indices(seed, 100, static_cast<std::size_t>(q - 1) * q);
        for (auto d : draws)
            targets.push_back({0, static_cast<int>(1 + d % (q - 1)), static_cast<int>(d / (q - 1))});
    }

    bool all_ok = true;
    std::string detail;
    for (const auto& tgt : targets) {
        if (q == 3) {
            auto res = sweep(N, exec, [&](std::int64_t i) {
                Triple g = p.at(i);
                bool centralizes = p.conj(tgt, g) == tgt;
                return centralizes == p.in_derived(g);
            });
            if (res.failures) {
                all_ok = false;
                detail = "p=" + show(tgt) + " g=" + show(p.at(res.first_failure));
                break;
            }
        } else {
            auto inside = sweep(static_cast<std::int64_t>(q) * q, exec, [&](std::int64_t i) {
                Triple g{0, static_cast<int>(i % q), static_cast<int>(i / q)};
                return p.conj(tgt, g) == tgt;
            });
            auto draws = draw_indices(seed + 1 + p.index_of(tgt), 10000, p.size());
            auto outside = sweep(static_cast<std::int64_t>(draws.size()), exec, [&](std::int64_t i) {
                Triple g = p.at(draws[i]);
                if (p.in_derived(g)) return true;
                return p.conj(tgt, g) != tgt;
            });
            if (inside.failures || outside.failures) {
                all_ok = false;
                detail = "p=" + show(tgt);
                break;
            }
        }
    }
    report.add({"centralizer-of-derived-noncentral", all_ok, detail});

    {
        // elements of the center commute with everything
        SweepResult res;
        if (q <= 27) {
            res = sweep(static_cast<std::int64_t>(q) * N, exec, [&](std::int64_t i) {
                Triple z{0, 0, static_cast<int>(i % q)};
                return p.conj(z, p.at(i / q)) == z;
            });
        } else {
            auto draws = draw_indices(seed + 2, 200000, p.size());
            res = sweep(static_cast<std::int64_t>(draws.size() / 2), exec, [&](std::int64_t i) {
                Triple z{0, 0, static_cast<int>(draws[2 * i] % static_cast<std::size_t>(q))};
                return p.conj(z, p.at(draws[2 * i + 1])) == z;
            });
        }
        report.add({"center-in-every-centralizer", res.failures == 0, ""});
    }
    return report;
}

SylowReport verify_w_orbits(int n, std::uint64_t seed, Exec exec) {
    PModel p(n);
    const GF3& f = p.field();
    const int q = p.q();
    const std::int64_t N = static_cast<std::int64_t>(p.size());
    SylowReport report;
    WAction act;
    const int g = f.generator();
    const int g2 = f.mul(g, g);

    {
        // homomorphism property of the action, for both generators used below
        for (int w : {g, g2}) {
            SweepResult res;
            if (q == 3) {
                res = sweep(N * N, exec, [&](std::int64_t i) {
                    Triple a = p.at(i % N), b = p.at(i / N);
                    return act.apply(p, w, p.mul(a, b)) ==
                           p.mul(act.apply(p, w, a), act.apply(p, w, b));
                });
            } else {
                auto draws = draw_indices(seed + w, 20000, p.size());
                res = sweep(static_cast<std::int64_t>(draws.size() / 2), exec, [&](std::int64_t i) {
                    Triple a = p.at(draws[2 * i]), b = p.at(draws[2 * i + 1]);
                    return act.apply(p, w, p.mul(a, b)) ==
                           p.mul(act.apply(p, w, a), act.apply(p, w, b));
                });
            }
            if (res.failures)
                return report.add({"action-not-automorphism", false, "w=" + std::to_string(w)}),
                       report;
        }
        report.add({"action-homomorphism", true, ""});
    }

    {
        // (a) <g> regular on Z(P) \ {1}
        bool ok = true;
        for (int z = 1; z < q && ok; ++z) {
            Triple cur{0, 0, z};
            int steps = 0;
            do {
                cur = act.apply(p, g, cur);
                ++steps;
            } while (cur != Triple{0, 0, z} && steps <= q);
            ok = (steps == q - 1);
        }
        report.add({"regular-on-center", ok, ""});
    }

    {
        // (b) on P'/Z(P), via the y coordinate; orbits 1 + (q-1)/2 + (q-1)/2,
        // the two large ones mutually inverse
        for (int z = 0; z < q; ++z)
            if (act.apply(p, g2, Triple{0, 1, z}).y != act.apply(p, g2, Triple{0, 1, 0}).y) {
                report.add({"coset-action-ill-defined", false, "z=" + std::to_string(z)});
                return report;
            }
        std::vector<int> orbit_of(q, -1);
        std::vector<std::set<int>> orbits;
        for (int y = 0; y < q; ++y) {
            if (orbit_of[y] >= 0) continue;
            std::set<int> orbit;
            int cur = y;
            while (!orbit.count(cur)) {
                orbit.insert(cur);
                orbit_of[cur] = static_cast<int>(orbits.size());
                cur = act.apply(p, g2, Triple{0, cur, 0}).y;
            }
            orbits.push_back(std::move(orbit));
        }
        bool ok = orbits.size() == 3 && orbits[0] == std::set<int>{0} &&
                  orbits[1].size() == static_cast<std::size_t>((q - 1) / 2) &&
                  orbits[2].size() == static_cast<std::size_t>((q - 1) / 2);
        if (ok) {
            // inverse of the coset of (0,y,z) is the coset of (0,-y,.)
            for (int y : orbits[1])
                if (!orbits[2].count(f.neg(y))) ok = false;
        }
        std::ostringstream os;
        os << "orbit sizes:";
        for (const auto& o : orbits) os << " " << o.size();
        report.add({"derived-mod-center-orbits", ok, os.str()});
    }

    {
        // (c) on P/P', via the x coordinate: unique fixed point.  For q = 3
        // the acting group <g^2> is trivial and everything is fixed.
        int fixed = 0;
        for (int x = 0; x < q; ++x)
            if (f.mul(g2, x) == x) ++fixed;
        int expected = g2 == 1 ? q : 1;
        report.add({"p-mod-derived-fixed-points", fixed == expected,
                    "fixed points: " + std::to_string(fixed)});
    }

    {
        auto res = sweep(N, exec, [&](std::int64_t i) {
            Triple a = p.at(i);
            return act.apply(p, 1, a) == a;
        });
        report.add({"identity-acts-trivially", res.failures == 0, ""});
    }
    return report;
}

}  // namespace depthlab
