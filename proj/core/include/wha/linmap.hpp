#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "wha/field.hpp"
#include "wha/space.hpp"

namespace wha {

using Entry = std::pair<std::uint32_t, Scalar>;  // (row, value)
using SparseCol = std::vector<Entry>;             // rows strictly increasing, no zeros

struct Difference {
    std::uint32_t row, col;
    Scalar lhs, rhs;
};

// Grade-preserving linear map src -> tgt, stored by columns.
class LinMap {
public:
    LinMap(Field f, Space src, Space tgt);  // zero map
    static LinMap identity(Field f, const Space& x);
    // Entries (row, col, value); duplicates are summed. Throws NotGradePreserving.
    static LinMap from_triples(Field f, Space src, Space tgt,
                               const std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>& entries);
    // Trusted constructor from canonical columns (used by kernels).
    static LinMap from_columns(Field f, Space src, Space tgt, std::vector<SparseCol> cols);

    Field field() const { return field_; }
    const Space& src() const { return src_; }
    const Space& tgt() const { return tgt_; }
    const std::vector<SparseCol>& columns() const { return cols_; }
    const SparseCol& column(std::uint32_t j) const { return cols_[j]; }
    Scalar at(std::uint32_t row, std::uint32_t col) const;
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    void check_grades() const;  // throws NotGradePreserving

    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap scaled(const Scalar& s) const;

    // first entry (column-major) where the maps differ
    std::optional<Difference> first_difference(const LinMap& o) const;
    bool operator==(const LinMap& o) const;
    bool operator!=(const LinMap& o) const { return !(*this == o); }

private:
    Field field_;
    Space src_, tgt_;
    std::vector<SparseCol> cols_;
};

// Sort by row, merge duplicates, drop zeros.
void canonicalize(SparseCol& col);

// g . f
LinMap compose(const LinMap& g, const LinMap& f);
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor(const std::vector<LinMap>& fs);

// One block of a tensor layer: a map, or the identity on a space.
struct Block {
    const LinMap* map = nullptr;
    Space ident;
    const Space& src() const { return map ? map->src() : ident; }
    const Space& tgt() const { return map ? map->tgt() : ident; }
};

// (b_1 (x) ... (x) b_k) . input, computed column by column without forming
// the Kronecker product.
LinMap apply_layer(const std::vector<Block>& blocks, const LinMap& input);

class Bicharacter;

// c_{X,Y}: X(x)Y -> Y(x)X, x(x)y |-> chi(|x|,|y|) y(x)x
LinMap braiding(const Space& x, const Space& y, const Bicharacter& chi);
// inverse of c_{X,Y}: Y(x)X -> X(x)Y
LinMap braiding_inv(const Space& x, const Space& y, const Bicharacter& chi);

struct DualData {
    Space dual;
    LinMap ev;    // X*(x)X -> I
    LinMap coev;  // I -> X(x)X*
};
DualData dual_space(Field f, const Space& x);

}  // namespace wha
