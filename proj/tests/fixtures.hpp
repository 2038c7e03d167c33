#pragma once

#include <cmath>

#include "sparsecert/sensing.hpp"

namespace sparsecert::testing {

/// Columns e1, e2 and (e1 + e2) / sqrt(2).
inline SensingMatrix canonical_2x3() {
  Matrix a(2, 3);
  const double h = 1.0 / std::sqrt(2.0);
  a << 1.0, 0.0, h,
       0.0, 1.0, h;
  return SensingMatrix(a);
}

inline SparseSignal unit_at(Index n, Index i, double value = 1.0) {
  return SparseSignal(SupportSet(n, {i}), Vector::Constant(1, value));
}

}  // namespace sparsecert::testing
