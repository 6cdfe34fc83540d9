#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "wha/linmap.hpp"
#include "wha/space.hpp"

namespace th {

using namespace wha;

inline Space plain(int dim, const std::string& p = "x") {
    std::vector<std::string> l;
    for (int i = 0; i < dim; ++i) l.push_back(p + std::to_string(i));
    return Space::atomic(l);
}

inline LinMap mat(Field f, const Space& src, const Space& tgt, const std::vector<std::vector<long>>& rows) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
        for (std::uint32_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) e.emplace_back(i, j, Scalar::from_int(f, rows[i][j]));
    return LinMap::from_triples(f, src, tgt, e);
}

inline GroupPtr cyclic(std::uint32_t n) {
    return std::make_shared<const GradingGroup>(std::vector<std::uint32_t>{n});
}

// chi(a, b) = 2^{ab} over F_5 on Z/4: c^2 != 1
inline Bicharacter z4_f5() {
    const Field F5 = Field::prime(5);
    return Bicharacter::from_generators(F5, cyclic(4), {{Scalar::from_int(F5, 2)}});
}

// chi(a, b) = (-1)^{ab} over Q on Z/2: symmetric, not trivial
inline Bicharacter z2_q() {
    const Field Q = Field::rationals();
    return Bicharacter::from_generators(Q, cyclic(2), {{Scalar::from_int(Q, -1)}});
}

}  // namespace th
