#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthlab/cyclotomic.hpp"
#include "depthlab/group.hpp"

namespace depthlab {

struct ClassMeta {
    std::uint64_t size = 0;
    int rep_order = 0;
};

/// Exact character table.  Rows are irreducible characters, columns follow
/// the deterministic class ordering of PermGroup::conjugacy_classes().
struct CharacterTable {
    std::uint64_t group_order = 0;
    int conductor = 1;
    std::vector<ClassMeta> classes;
    std::vector<std::vector<Cyclotomic>> irreducibles;
    /// inverse_class[k] = index of the class of inverses of class k.
    std::vector<std::size_t> inverse_class;

    std::size_t num_classes() const { return classes.size(); }
    Rational degree(std::size_t row) const { return irreducibles[row][0].rational_value(); }

    /// Throws InconsistencyError unless both orthogonality relations hold
    /// exactly and degrees are positive integers with square sum |G|.
    void validate() const;
};

/// Burnside/Dixon character table via splitting modulo a prime p = 1 (mod
/// exponent), lifted exactly to Q(zeta_exponent).
CharacterTable dixon_table(const PermGroup& g);

/// Map from subgroup classes into group classes.
struct ClassFusion {
    std::vector<std::size_t> map;
};

/// Fusion of H's classes into G's, H given by a handle inside G.
ClassFusion class_fusion(const PermGroup& g, const CharacterTable& table_g,
                         const SubgroupHandle& h, const PermGroup& h_group,
                         const CharacterTable& table_h);

/// m[psi][chi] = <psi^G, chi> = <psi, chi|_H>, all entries nonnegative integers.
struct MultiplicityMatrix {
    std::vector<std::vector<BigInt>> m;
};

MultiplicityMatrix induce_restrict(const CharacterTable& table_h, const CharacterTable& table_g,
                                   const ClassFusion& fusion);

std::vector<Cyclotomic> restrict_character(const std::vector<Cyclotomic>& chi_g,
                                           const ClassFusion& fusion);

/// (1/|G|) sum_k size_k a_k conj(b_k).
Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const std::vector<ClassMeta>& classes, std::uint64_t group_order);

/// JSON export/import; import validates the orthogonality invariants.
std::string table_to_json(const CharacterTable& t);
CharacterTable table_from_json(const std::string& text);

}  // namespace depthlab
