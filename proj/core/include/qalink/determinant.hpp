#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "qalink/diagram.hpp"

namespace qalink {

using Int = boost::multiprecision::cpp_int;

struct GoeritzOptions {
  bool swap_shading = false;  // use the other checkerboard color class
  int delete_region = -1;     // white-region index to strike; -1 = last
};

// Reduced Goeritz matrix of a connected diagram: one row/column per white
// region minus the struck one. entries is (n-1) x (n-1).
struct GoeritzMatrix {
  std::vector<std::vector<Int>> entries;
  int n_white_regions = 0;
  int deleted_region = -1;
  bool swapped_shading = false;
};

GoeritzMatrix goeritz_matrix(const LinkDiagram& d);
GoeritzMatrix goeritz_matrix(const LinkDiagram& d, const GoeritzOptions& opts);

// |det| of the reduced matrix, fraction-free (Bareiss) over big integers.
Int goeritz_det(const GoeritzMatrix& m);

// Unsigned link determinant. Split diagrams give 0; crossingless unknot 1.
Int determinant(const LinkDiagram& d);

// Independent cross-check: Wirtinger-style presentation evaluated at -1,
// eliminated over exact rationals. Agrees with determinant() on everything.
Int determinant_oracle(const LinkDiagram& d);

}  // namespace qalink
