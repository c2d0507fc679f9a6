#include "mukai/normal_form.hpp"

#include "mukai/error.hpp"

#include <algorithm>

namespace mukai {
namespace {

void add_multiple(IntRow& target, const IntRow& source, const Int& factor) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += factor * source[j];
}

bool is_zero(const IntRow& row) {
  return std::all_of(row.begin(), row.end(), [](const Int& x) { return x == 0; });
}

// Unimodular row operations on rows[from..] until at most one of them has a
// nonzero entry in `col`; that row is swapped to position `from`.
// Returns false when the whole column segment is zero.
bool eliminate_column(IntMatrix& rows, std::size_t from, std::size_t col) {
  while (true) {
    std::size_t best = rows.size();
    for (std::size_t i = from; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
    }
    if (best == rows.size()) return false;
    std::swap(rows[from], rows[best]);
    bool done = true;
    for (std::size_t i = from + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Int q = floor_div(rows[i][col], rows[from][col]);
      add_multiple(rows[i], rows[from], -q);
      if (rows[i][col] != 0) done = false;
    }
    if (done) return true;
  }
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != width) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    if (!eliminate_column(rows, pivot_row, col)) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    const Int& pivot = rows[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(rows[i][col], pivot);
      if (q != 0) add_multiple(rows[i], rows[pivot_row], -q);
    }
    ++pivot_row;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
  return rows;
}

IntMatrix integer_kernel(std::span<const Int> coeffs) {
  const std::size_t n = coeffs.size();
  // Augmented rows (c_i | e_i); the row operations stay unimodular on the tail.
  IntMatrix rows(n, IntRow(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][0] = coeffs[i];
    rows[i][i + 1] = 1;
  }
  const bool nonzero = eliminate_column(rows, 0, 0);
  IntMatrix kernel;
  for (std::size_t i = nonzero ? 1 : 0; i < n; ++i) {
    kernel.emplace_back(rows[i].begin() + 1, rows[i].end());
  }
  return hermite_normal_form(std::move(kernel));
}

std::optional<std::vector<Int>> solve_in_hnf(const IntMatrix& hnf, std::span<const Int> y) {
  IntRow rest(y.begin(), y.end());
  std::vector<Int> coords(hnf.size(), 0);
  for (std::size_t i = 0; i < hnf.size(); ++i) {
    if (hnf[i].size() != rest.size()) throw Error(ErrorKind::DimensionMismatch, "basis width");
    auto pivot = std::find_if(hnf[i].begin(), hnf[i].end(), [](const Int& x) { return x != 0; });
    const std::size_t col = static_cast<std::size_t>(pivot - hnf[i].begin());
    // Columns left of this pivot must already be cleared.
    for (std::size_t j = 0; j < col; ++j) {
      if (rest[j] != 0) return std::nullopt;
    }
    if (rest[col] % *pivot != 0) return std::nullopt;
    coords[i] = rest[col] / *pivot;
    add_multiple(rest, hnf[i], -coords[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

std::optional<std::vector<Int>> solve_linear_form(std::span<const Int> coeffs,
                                                  const Int& target) {
  std::vector<Int> x(coeffs.size(), 0);
  Int g = 0;
  // Running Bezout combination: sum coeffs[i] * x[i] == g.
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (g == 0) {
      g = abs(coeffs[i]);
      x[i] = sgn(coeffs[i]);
      continue;
    }
    GcdResult e = extended_gcd(g, coeffs[i]);
    for (std::size_t j = 0; j < i; ++j) x[j] *= e.x;
    x[i] = e.y;
    g = e.gcd;
  }
  if (g == 0) {
    if (target == 0) return x;
    return std::nullopt;
  }
  if (target % g != 0) return std::nullopt;
  Int scale = target / g;
  for (auto& xi : x) xi *= scale;
  return x;
}

}  // namespace mukai
