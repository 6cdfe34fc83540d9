#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wha/linmap.hpp"

namespace wha {

// Dense row-major matrix over a field; used only for small eliminations.
struct Dense {
    Field field;
    std::uint32_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Dense(Field f, std::uint32_t r, std::uint32_t c) : field(f), rows(r), cols(c), a(std::size_t(r) * c, Scalar::zero(f)) {}
    Scalar& operator()(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * cols + j]; }
    const Scalar& operator()(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * cols + j]; }
    static Dense from(const LinMap& m);
};

// Gauss-Jordan in place; returns pivot columns.
std::vector<std::uint32_t> rref(Dense& m);
std::uint32_t rank(const LinMap& m);
// Basis of the null space, one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const Dense& m);

// Solve M x = b. Returns a particular solution, or nullopt together with a
// left certificate y (y^T M = 0, y^T b != 0) when inconsistent.
struct AffineSolution {
    std::optional<std::vector<Scalar>> particular;
    std::vector<std::vector<Scalar>> kernel;
    std::vector<Scalar> certificate;
};
AffineSolution solve_affine(const Dense& m, const std::vector<Scalar>& b);

// Two-sided inverse of a square map, or nullopt when singular.
std::optional<LinMap> inverse(const LinMap& m);

struct Splitting {
    Space image;
    LinMap retract;  // X -> P
    LinMap section;  // P -> X
};
// Splits an idempotent through its column space; throws NotIdempotent.
Splitting split_idempotent(const LinMap& e);

struct Equalizer {
    Space object;
    LinMap incl;
};
// Kernel of f - g, computed grade by grade so the basis is homogeneous.
Equalizer equalizer(const LinMap& f, const LinMap& g);

// true iff every column of a lies in the column span of b
bool column_span_contains(const LinMap& b, const LinMap& a);

}  // namespace wha
