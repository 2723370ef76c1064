#pragma once

#include <vector>

#include "betticone/diagram.hpp"
#include "betticone/multipoly.hpp"

namespace betticone {

// Weakly decreasing integer sequence; nonnegative where used as a tableau
// shape.
using Shape = std::vector<int>;

// Weight enumerator of semistandard tableaux of the given shape with
// entries in 1..nvars: rows weakly increase, columns strictly increase.
// All terms share total degree |shape|. nvars in {2, 3}.
LaurentPoly ssyt_character(const Shape& shape, int nvars);

// Number of semistandard tableaux, via the hook-content style product
// prod_{i<j} (shape_i - shape_j + j - i) / (j - i). Independent of the
// enumeration; used as a cross-check.
Integer weyl_dimension(const Shape& shape, int n);

// The n+1 shapes of the pure equivariant resolution with degree
// differences e: base lambda_i = sum_{j>i} e_j - (n-i), and the i-th shape
// adds e_1..e_i to the first i coordinates. Every shape must come out
// weakly decreasing and nonnegative (std::invalid_argument otherwise).
std::vector<Shape> equivariant_shapes(const std::vector<int>& e, int n);

// Diagram with F_i spanned by the weight spaces of the i-th shape's
// character.
BettiDiagram equivariant_diagram(const std::vector<int>& e, int n);

// F0 generator degrees a with no F1 generator b matching a in every
// coordinate except k (1-based) and exceeding it in coordinate k. Any hit
// rules out presenting a module of codimension nvars. Requires a
// nonnegative diagram.
std::vector<MultiDegree> collapse_obstruction(const BettiDiagram& d, int k);

// Signed twist combinations of E(1,2,1). The cyclic one (twists by the
// three cyclic shuffles of (2,1,0), minus the twist by (1,1,1)) is
// nonnegative and satisfies every fiber equation yet fails the collapse
// test; the symmetric one (all six permutations of (2,1,0), minus
// (1,1,1)) passes it in every direction.
BettiDiagram cyclic_twist_combination();
BettiDiagram symmetric_twist_combination();

} // namespace betticone
