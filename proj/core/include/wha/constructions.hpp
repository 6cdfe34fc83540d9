#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wha/report.hpp"
#include "wha/structures.hpp"

namespace wha {

struct MorphismDecl {
    std::string name, src, tgt;
};

// Objects, non-identity morphisms and the composition table. compose[(g, f)]
// names g . f for every composable pair (src g = tgt f) of non-identity
// morphisms; identities are implicit and called id_<object>.
struct FiniteCategoryPresentation {
    std::vector<std::string> objects;
    std::vector<MorphismDecl> morphisms;
    std::map<std::pair<std::string, std::string>, std::string> compose;
    std::optional<std::map<std::string, std::string>> inverse;
};

std::string identity_name(const std::string& object);

// Totality, identity and associativity; groupoid inverses when a table is given.
Report validate_category(const FiniteCategoryPresentation& p);
bool is_valid_groupoid(const FiniteCategoryPresentation& p);

// Basis: identities in object order, then the declared morphisms. The
// product of basis elements is f . g = g o f when defined, else 0.
WeakBimonoidData category_algebra(const FiniteCategoryPresentation& p, Field field);
// category_algebra with nu(f) = f^-1, which is its own inverse
WeakHopfData groupoid_algebra(const FiniteCategoryPresentation& p, Field field);

// the inverse-table antipode of a groupoid algebra; used as an oracle
LinMap inverse_table_antipode(const FiniteCategoryPresentation& p, const WeakBimonoidData& w);

// walking arrow A -> B; walking isomorphism G2; one-object groups Z/2 and Z/3 side by side
FiniteCategoryPresentation walking_arrow();
FiniteCategoryPresentation walking_isomorphism();
FiniteCategoryPresentation cyclic_groups_disjoint(const std::vector<std::uint32_t>& orders);

// K^n with pointwise product, delta(e_i) = e_i (x) e_i, eps(e_i) = 1
FrobeniusData functions_frobenius(std::uint32_t n, Field field);

struct GroupTable {
    std::vector<std::string> elements;          // element 0 is the identity
    std::vector<std::vector<std::uint32_t>> mul;  // mul[a][b] = ab
};
GroupTable cyclic_group(std::uint32_t n);

// Group algebra with delta(g) = |G|^-1 sum_h h (x) h^-1 g and eps(g) = |G| [g = 1].
// With grades (one per element, a homomorphism into chi's group) the algebra
// lives in the braided category of chi. Throws BadCharacteristic.
FrobeniusData group_frobenius(const GroupTable& g, Field field);
FrobeniusData group_frobenius(const GroupTable& g, const Bicharacter& chi, const std::vector<std::uint32_t>& grades);

// The weak Hopf monoid R (x) R of a separable Frobenius monoid R. Throws NotSeparable.
struct FrobeniusSquare {
    WeakHopfData hopf;
    LinMap r_closed;  // simplified form of r
    LinMap t_closed;  // simplified form of t
};
FrobeniusSquare frobenius_square_full(const FrobeniusData& R);
WeakHopfData frobenius_square(const FrobeniusData& R);

}  // namespace wha
