#pragma once

#include "mukai/integer.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mukai {

using IntRow = std::vector<Int>;
using IntMatrix = std::vector<IntRow>;

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Zero rows are dropped. Each remaining row has a positive pivot strictly to
/// the right of the previous row's pivot, and every entry above a pivot lies
/// in [0, pivot). The result depends only on the lattice, not on the
/// generating set, so it doubles as a canonical basis.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Saturated basis of { x in Z^n : coeffs . x = 0 } in Hermite normal form.
/// Has n - 1 rows when coeffs is nonzero and n rows otherwise.
IntMatrix integer_kernel(std::span<const Int> coeffs);

/// Integer coordinates of y with respect to a basis in Hermite normal form,
/// or nullopt when y is outside its integer span.
std::optional<std::vector<Int>> solve_in_hnf(const IntMatrix& hnf, std::span<const Int> y);

/// Some x with coeffs . x = target, or nullopt when gcd(coeffs) does not divide target.
std::optional<std::vector<Int>> solve_linear_form(std::span<const Int> coeffs, const Int& target);

}  // namespace mukai
