#pragma once

#include <array>
#include <map>

#include "tenscert/polynomial.hpp"

namespace tenscert::algebra {

/// Permutation of the letters {x, y, z}: image[0] is where x goes, etc.
/// Composition follows function composition: (a * b)(l) = a(b(l)).
struct LetterPerm {
  std::array<int, 3> image{0, 1, 2};

  static LetterPerm identity() { return {}; }
  /// All six permutations; identity first.
  static std::array<LetterPerm, 6> all();
  /// Cycle x -> y -> z -> x.
  static LetterPerm cycle() { return {{1, 2, 0}}; }
  static LetterPerm swap_xy() { return {{1, 0, 2}}; }

  LetterPerm inverse() const;
  friend LetterPerm operator*(const LetterPerm& a, const LetterPerm& b);
  friend bool operator==(const LetterPerm&, const LetterPerm&) = default;
};

/// Renames letters per index: x_i -> sigma(x)_i and so on. DomainError if f
/// uses t or chart variables.
Polynomial apply_s3(const Polynomial& f, const LetterPerm& sigma);

/// Renames (x_i, y_i, z_i) -> (x_rho(i), y_rho(i), z_rho(i)) into a ring with
/// target_n indices. rho must be injective and cover every index f uses.
Polynomial apply_index_map(const Polynomial& f, const std::map<int, int>& rho, int target_n);

}  // namespace tenscert::algebra
