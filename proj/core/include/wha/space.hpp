#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wha/field.hpp"

namespace wha {

// Finite abelian group Z/n1 x ... x Z/nk. Elements are encoded as a single
// mixed-radix index (first factor most significant); index 0 is the identity.
class GradingGroup {
public:
    GradingGroup() : GradingGroup(std::vector<std::uint32_t>{}) {}
    explicit GradingGroup(std::vector<std::uint32_t> moduli);

    const std::vector<std::uint32_t>& moduli() const { return moduli_; }
    std::uint32_t order() const { return order_; }
    bool trivial() const { return order_ == 1; }

    std::uint32_t encode(const std::vector<std::uint32_t>& residues) const;
    std::vector<std::uint32_t> decode(std::uint32_t g) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * order_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::string str(std::uint32_t g) const;

    bool operator==(const GradingGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<std::uint32_t> moduli_;
    std::uint32_t order_ = 1;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
};

using GroupPtr = std::shared_ptr<const GradingGroup>;

GroupPtr trivial_group();

// chi: G x G -> K^x, multiplicative in each argument.
class Bicharacter {
public:
    // trivial bicharacter on the trivial group
    explicit Bicharacter(Field f);
    // Full table, row-major chi(a, b) = table[a * |G| + b]; validated by enumeration.
    Bicharacter(Field f, GroupPtr group, std::vector<Scalar> table);
    // Values on the generators e_i of the cyclic factors, extended multiplicatively.
    static Bicharacter from_generators(Field f, GroupPtr group, const std::vector<std::vector<Scalar>>& gens);

    Field field() const { return field_; }
    const GroupPtr& group() const { return group_; }
    const Scalar& operator()(std::uint32_t a, std::uint32_t b) const { return table_[a * group_->order() + b]; }
    // checked by enumeration of all triples
    bool multiplicative() const;
    bool symmetric_braiding() const;  // chi(a,b) chi(b,a) == 1 for all a, b

private:
    Field field_;
    GroupPtr group_;
    std::vector<Scalar> table_;
};

// One tensor factor: an ordered basis of homogeneous vectors.
struct Basis {
    std::vector<std::string> labels;
    std::vector<std::uint32_t> grades;
    GroupPtr group;

    bool operator==(const Basis& o) const;
};

using BasisPtr = std::shared_ptr<const Basis>;

// An object of the strict monoidal category: a tensor word of bases. The unit
// is the empty word. Indices of a word are mixed-radix, left factor major.
class Space {
public:
    Space() = default;  // unit object I
    static Space atomic(std::vector<std::string> labels, std::vector<std::uint32_t> grades = {},
                        GroupPtr group = nullptr);
    static Space unit() { return Space(); }

    std::uint32_t dim() const { return dim_; }
    const std::vector<BasisPtr>& factors() const { return factors_; }
    const GroupPtr& group() const { return group_; }
    std::uint32_t grade(std::uint32_t i) const;
    std::vector<std::uint32_t> grades() const;
    std::string label(std::uint32_t i) const;

    friend Space operator*(const Space& a, const Space& b);  // tensor product
    bool operator==(const Space& o) const;
    bool operator!=(const Space& o) const { return !(*this == o); }
    std::string describe() const;

private:
    std::vector<BasisPtr> factors_;
    std::uint32_t dim_ = 1;
    GroupPtr group_ = trivial_group();
};

Space tensor(const std::vector<Space>& spaces);

}  // namespace wha
