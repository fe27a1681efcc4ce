#include "capelli/linalg.hpp"

#include "capelli/error.hpp"

namespace capelli {

std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b) {
  const size_t n = a.size();
  require(b.size() == n, "linear system shape mismatch");
  for (const auto& row : a) require(row.size() == n, "linear system is not square");
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = 1 / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rat f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace capelli
