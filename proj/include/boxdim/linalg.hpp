#pragma once

#include "boxdim/rational.hpp"

#include <optional>
#include <vector>

namespace boxdim {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Solution set of A x = b written as origin + span(basis).
struct AffineSpace {
    RationalVector origin;
    std::vector<RationalVector> basis;  // empty when the solution is unique

    RationalVector point(const RationalVector& parameters) const;
};

// Exact Gauss-Jordan. Returns nullopt when the system is inconsistent.
std::optional<AffineSpace> solve_affine(RationalMatrix a, RationalVector b);

// Unique solution of A x = b, or nullopt when inconsistent or underdetermined.
std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace boxdim
