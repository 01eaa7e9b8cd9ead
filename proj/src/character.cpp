#include "depthlab/character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "depthlab/errors.hpp"
#include "json.hpp"

namespace depthlab {

namespace {

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 subm(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root(u64 p) {
    // factor p-1 by trial division
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 f : factors)
            if (powm(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw InconsistencyError("no primitive root found");
}

struct Basis {
    // rows in reduced row echelon form over GF(p)
    std::vector<std::vector<u64>> rows;
    std::vector<std::size_t> pivots;
};

Basis rref(std::vector<std::vector<u64>> rows, u64 p) {
    Basis b;
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        u64 inv = invm(rows[rank][c], p);
        for (auto& x : rows[rank]) x = mulm(x, inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            u64 f = rows[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc)
                rows[r][cc] = subm(rows[r][cc], mulm(f, rows[rank][cc], p), p);
        }
        b.pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    b.rows = std::move(rows);
    return b;
}

// Nullspace basis of a square matrix over GF(p).
std::vector<std::vector<u64>> nullspace(std::vector<std::vector<u64>> m, u64 p) {
    std::size_t d = m.size();
    Basis b = rref(std::move(m), p);
    std::vector<bool> is_pivot(d, false);
    for (auto c : b.pivots) is_pivot[c] = true;
    std::vector<std::vector<u64>> out;
    for (std::size_t freec = 0; freec < d; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<u64> v(d, 0);
        v[freec] = 1;
        for (std::size_t r = 0; r < b.rows.size(); ++r)
            v[b.pivots[r]] = subm(0, b.rows[r][freec], p);
        out.push_back(std::move(v));
    }
    return out;
}

struct DixonFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CharacterTable dixon_attempt(const PermGroup& g, u64 p, int exponent) {
    const auto& classes = g.conjugacy_classes();
    const auto& els = g.elements();
    const auto& cls_of = g.class_indices();
    const std::size_t r = classes.size();
    const u64 order = g.order();

    // class member index lists
    std::vector<std::vector<std::size_t>> members(r);
    for (std::size_t i = 0; i < els.size(); ++i) members[cls_of[i]].push_back(i);

    // inverse-class map
    std::vector<std::size_t> inv_class(r);
    for (std::size_t k = 0; k < r; ++k) inv_class[k] = g.class_of(classes[k].representative.inverse());

    // class algebra constants: a[i][j][k] = #{(x,y) in C_i x C_j : x y = z_k}
    std::vector<std::vector<std::vector<u64>>> mats(r);
    for (std::size_t i = 0; i < r; ++i) {
        mats[i].assign(r, std::vector<u64>(r, 0));
        for (std::size_t xi : members[i]) {
            const Permutation xinv = els[xi].inverse();
            for (std::size_t k = 0; k < r; ++k) {
                std::size_t j = g.class_of(xinv * classes[k].representative);
                mats[i][j][k] = addm(mats[i][j][k], 1, p);
            }
        }
    }

    // split the coordinate space into common eigenspaces
    std::vector<Basis> spaces;
    {
        std::vector<std::vector<u64>> id(r, std::vector<u64>(r, 0));
        for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
        spaces.push_back(rref(std::move(id), p));
    }
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<Basis> next;
        for (auto& sp : spaces) {
            std::size_t d = sp.rows.size();
            if (d <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // restriction matrix: column s = coords of M_i * basis_s
            std::vector<std::vector<u64>> rmat(d, std::vector<u64>(d, 0));
            for (std::size_t s = 0; s < d; ++s) {
                std::vector<u64> w(r, 0);
                for (std::size_t j = 0; j < r; ++j) {
                    u64 acc = 0;
                    for (std::size_t k = 0; k < r; ++k)
                        if (mats[i][j][k] && sp.rows[s][k])
                            acc = addm(acc, mulm(mats[i][j][k], sp.rows[s][k], p), p);
                    w[j] = acc;
                }
                // coordinates in the RREF basis
                for (std::size_t t = 0; t < d; ++t) {
                    u64 c = w[sp.pivots[t]];
                    rmat[t][s] = c;
                    if (c)
                        for (std::size_t k = 0; k < r; ++k)
                            w[k] = subm(w[k], mulm(c, sp.rows[t][k], p), p);
                }
                for (std::size_t k = 0; k < r; ++k)
                    if (w[k]) throw DixonFailure("subspace not invariant");
            }
            std::size_t found = 0;
            for (u64 lam = 0; lam < p && found < d; ++lam) {
                auto shifted = rmat;
                for (std::size_t t = 0; t < d; ++t) shifted[t][t] = subm(shifted[t][t], lam, p);
                auto null = nullspace(std::move(shifted), p);
                if (null.empty()) continue;
                std::vector<std::vector<u64>> lifted;
                for (const auto& u : null) {
                    std::vector<u64> v(r, 0);
                    for (std::size_t s = 0; s < d; ++s)
                        if (u[s])
                            for (std::size_t k = 0; k < r; ++k)
                                v[k] = addm(v[k], mulm(u[s], sp.rows[s][k], p), p);
                    lifted.push_back(std::move(v));
                }
                found += null.size();
                next.push_back(rref(std::move(lifted), p));
            }
            if (found != d) throw DixonFailure("class matrix not diagonalizable mod p");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != r) throw DixonFailure("could not fully split eigenspaces");

    // each 1-dim space carries the central character; recover chi mod p
    std::vector<std::vector<u64>> chi_mod(r);
    std::vector<u64> degrees(r);
    u64 order_mod = order % p;
    for (std::size_t row = 0; row < r; ++row) {
        std::vector<u64> v = spaces[row].rows.front();
        if (v[0] == 0) throw DixonFailure("eigenvector vanishes at identity class");
        u64 scale = invm(v[0], p);
        for (auto& x : v) x = mulm(x, scale, p);
        u64 s = 0;
        for (std::size_t k = 0; k < r; ++k)
            s = addm(s, mulm(mulm(v[k], v[inv_class[k]], p), invm(classes[k].size % p, p), p), p);
        u64 d2 = mulm(order_mod, invm(s, p), p);
        u64 deg = 0;
        for (u64 d = 1; d * d <= order; ++d)
            if (mulm(d, d, p) == d2) {
                deg = d;
                break;
            }
        if (deg == 0) throw DixonFailure("degree not recovered");
        degrees[row] = deg;
        chi_mod[row].resize(r);
        for (std::size_t k = 0; k < r; ++k)
            chi_mod[row][k] = mulm(mulm(deg, v[k], p), invm(classes[k].size % p, p), p);
    }

    // power map for the lifting
    const int e = exponent;
    std::vector<std::vector<std::size_t>> pm(r, std::vector<std::size_t>(e));
    for (std::size_t k = 0; k < r; ++k) {
        Permutation x = Permutation::identity(g.degree());
        for (int s = 0; s < e; ++s) {
            pm[k][s] = g.class_of(x);
            x = x * classes[k].representative;
        }
    }

    u64 omega = powm(primitive_root(p), (p - 1) / e, p);
    u64 inv_e = invm(e % p, p);
    std::vector<u64> omega_pow(e);
    for (int t = 0; t < e; ++t) omega_pow[t] = powm(omega, t, p);

    CharacterTable table;
    table.group_order = order;
    table.conductor = e;
    table.inverse_class = inv_class;
    for (const auto& c : classes) table.classes.push_back({c.size, c.element_order});
    for (std::size_t row = 0; row < r; ++row) {
        std::vector<Cyclotomic> vals;
        for (std::size_t k = 0; k < r; ++k) {
            Cyclotomic val(e);
            for (int t = 0; t < e; ++t) {
                u64 acc = 0;
                for (int s = 0; s < e; ++s) {
                    u64 w = omega_pow[static_cast<std::size_t>(((long long)e - t) * s % e)];
                    acc = addm(acc, mulm(chi_mod[row][pm[k][s]], w, p), p);
                }
                u64 m = mulm(acc, inv_e, p);
                if (m > degrees[row]) throw DixonFailure("lifted multiplicity out of range");
                if (m) val += Cyclotomic::zeta_power(e, t, Rational(m));
            }
            vals.push_back(std::move(val));
        }
        table.irreducibles.push_back(std::move(vals));
    }

    // deterministic row order: degree, then value key
    std::vector<std::vector<std::vector<Rational>>> keys(r);
    for (std::size_t row = 0; row < r; ++row)
        for (const auto& v : table.irreducibles[row]) keys[row].push_back(v.basis_coeffs());
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
        return keys[a] < keys[b];
    });
    std::vector<std::vector<Cyclotomic>> sorted;
    for (std::size_t i : idx) sorted.push_back(std::move(table.irreducibles[i]));
    table.irreducibles = std::move(sorted);

    table.validate();
    return table;
}

}  // namespace

void CharacterTable::validate() const {
    const std::size_t r = classes.size();
    if (irreducibles.size() != r)
        throw InconsistencyError("table is not square");
    BigInt sq_sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
        Rational d = irreducibles[i][0].rational_value();
        if (d <= 0 || denominator(d) != 1)
            throw InconsistencyError("character degree not a positive integer");
        sq_sum += numerator(d) * numerator(d);
    }
    if (sq_sum != BigInt(group_order))
        throw InconsistencyError("degree squares do not sum to group order");
    BigInt size_sum = 0;
    for (const auto& c : classes) size_sum += c.size;
    if (size_sum != BigInt(group_order))
        throw InconsistencyError("class sizes do not sum to group order");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Cyclotomic acc(conductor);
            for (std::size_t k = 0; k < r; ++k)
                acc += irreducibles[i][k] * irreducibles[j][k].conj() * Rational(classes[k].size);
            Rational expect = (i == j) ? Rational(group_order) : Rational(0);
            if (acc != Cyclotomic(conductor, expect))
                throw InconsistencyError("row orthogonality fails");
        }
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = k; l < r; ++l) {
            Cyclotomic acc(conductor);
            for (std::size_t i = 0; i < r; ++i)
                acc += irreducibles[i][k] * irreducibles[i][l].conj();
            Rational expect =
                (k == l) ? Rational(group_order) / Rational(classes[k].size) : Rational(0);
            if (acc != Cyclotomic(conductor, expect))
                throw InconsistencyError("column orthogonality fails");
        }
}

CharacterTable dixon_table(const PermGroup& g) {
    if (g.order() > materialization_cap())
        throw CapacityError("group too large for dixon_table");
    const auto& classes = g.conjugacy_classes();
    long long e = 1;
    for (const auto& c : classes) e = std::lcm(e, (long long)c.element_order);

    // least p = 1 (mod e) above the 2*sqrt(|G|) heuristic, retried upward
    u64 lower = 2;
    while (lower * lower < 4 * g.order()) ++lower;
    u64 p = ((lower + e - 1) / e) * e + 1;
    if (p <= lower) p += e;
    for (int attempts = 0; attempts < 64; ++p) {
        if ((p - 1) % e != 0 || !is_prime(p)) continue;
        ++attempts;
        try {
            return dixon_attempt(g, p, static_cast<int>(e));
        } catch (const DixonFailure&) {
            continue;
        }
    }
    throw InconsistencyError("dixon_table failed for all primes tried");
}

ClassFusion class_fusion(const PermGroup& g, const CharacterTable& table_g,
                         const SubgroupHandle& h, const PermGroup& h_group,
                         const CharacterTable& table_h) {
    const auto& h_classes = h_group.conjugacy_classes();
    ClassFusion fusion;
    for (const auto& hc : h_classes) {
        std::size_t gc = g.class_of(hc.representative);
        if (table_g.classes[gc].rep_order != hc.element_order)
            throw InconsistencyError("fusion does not preserve element order");
        fusion.map.push_back(gc);
    }
    // consistency: |C_g ∩ H| must equal the sum of fused H-class sizes
    std::vector<std::uint64_t> tally(table_g.num_classes(), 0);
    for (const auto& x : h.elements()) tally[g.class_of(x)] += 1;
    std::vector<std::uint64_t> fused(table_g.num_classes(), 0);
    for (std::size_t k = 0; k < fusion.map.size(); ++k)
        fused[fusion.map[k]] += table_h.classes[k].size;
    if (tally != fused) throw InconsistencyError("fusion incompatible with class sizes");
    (void)table_h;
    return fusion;
}

MultiplicityMatrix induce_restrict(const CharacterTable& table_h, const CharacterTable& table_g,
                                   const ClassFusion& fusion) {
    if (fusion.map.size() != table_h.num_classes())
        throw InputError("fusion size mismatch");
    MultiplicityMatrix out;
    const std::size_t rh = table_h.num_classes(), rg = table_g.num_classes();
    out.m.assign(rh, std::vector<BigInt>(rg, 0));
    for (std::size_t i = 0; i < rh; ++i)
        for (std::size_t j = 0; j < rg; ++j) {
            Cyclotomic acc(1);
            for (std::size_t k = 0; k < rh; ++k)
                acc += table_h.irreducibles[i][k] * table_g.irreducibles[j][fusion.map[k]].conj() *
                       Rational(table_h.classes[k].size);
            Rational val;
            try {
                val = acc.rational_value() / Rational(table_h.group_order);
            } catch (const InconsistencyError&) {
                throw InconsistencyError("non-rational induction multiplicity");
            }
            if (denominator(val) != 1 || val < 0)
                throw InconsistencyError("non-integral induction multiplicity (bad fusion or table)");
            out.m[i][j] = numerator(val);
        }
    return out;
}

std::vector<Cyclotomic> restrict_character(const std::vector<Cyclotomic>& chi_g,
                                           const ClassFusion& fusion) {
    std::vector<Cyclotomic> out;
    out.reserve(fusion.map.size());
    for (std::size_t k : fusion.map) out.push_back(chi_g[k]);
    return out;
}

Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const std::vector<ClassMeta>& classes, std::uint64_t group_order) {
    if (a.size() != classes.size() || b.size() != classes.size())
        throw InputError("inner_product: length mismatch");
    Cyclotomic acc(1);
    for (std::size_t k = 0; k < classes.size(); ++k)
        acc += a[k] * b[k].conj() * Rational(classes[k].size);
    return acc * (Rational(1) / Rational(group_order));
}

std::string table_to_json(const CharacterTable& t) {
    nlohmann::json j;
    j["order"] = t.group_order;
    auto& cls = j["classes"] = nlohmann::json::array();
    for (const auto& c : t.classes)
        cls.push_back({{"size", c.size}, {"rep_order", c.rep_order}});
    auto& irr = j["irreducibles"] = nlohmann::json::array();
    for (const auto& row : t.irreducibles) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& v : row) {
            nlohmann::json entry;
            entry["conductor"] = t.conductor;
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : v.embedded(t.conductor).basis_coeffs()) {
                std::ostringstream os;
                os << c;
                coeffs.push_back(os.str());
            }
            entry["coeffs"] = std::move(coeffs);
            jrow.push_back(std::move(entry));
        }
        irr.push_back(std::move(jrow));
    }
    return j.dump();
}

CharacterTable table_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CharacterTable t;
    t.group_order = j.at("order").get<std::uint64_t>();
    for (const auto& c : j.at("classes"))
        t.classes.push_back({c.at("size").get<std::uint64_t>(), c.at("rep_order").get<int>()});
    t.conductor = 1;
    for (const auto& row : j.at("irreducibles"))
        for (const auto& entry : row)
            t.conductor = lcm_int(t.conductor, entry.at("conductor").get<int>());
    for (const auto& row : j.at("irreducibles")) {
        std::vector<Cyclotomic> vals;
        for (const auto& entry : row) {
            int n = entry.at("conductor").get<int>();
            Cyclotomic v(n);
            const auto& coeffs = entry.at("coeffs");
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                Rational c;
                std::istringstream is(coeffs[i].get<std::string>());
                is >> c;
                if (c != 0) v += Cyclotomic::zeta_power(n, static_cast<long long>(i), c);
            }
            vals.push_back(v.embedded(t.conductor));
        }
        t.irreducibles.push_back(std::move(vals));
    }
    t.validate();
    return t;
}

}  // namespace depthlab
