#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace tenscert::algebra {

/// Hard cap on variables per ring; t + 3N letters + chart coordinates.
inline constexpr std::size_t kMaxVars = 32;

using VarId = std::uint8_t;

enum class Letter : std::uint8_t { T, X, Y, Z, U };

/// The variables of a ring: t (optional), x_i, y_i, z_i for i = 1..N, and
/// chart coordinates u_1..u_n. Layout of variable ids is fixed:
/// t = 0, x_i = 3i - 2, y_i = 3i - 1, z_i = 3i, u_k = 3N + k.
class VarSet {
 public:
  VarSet() = default;
  VarSet(int n_indices, bool has_t, int n_chart = 0);

  static VarSet tensorial(int n, bool with_t = false) { return VarSet(n, with_t, 0); }
  static VarSet chart(int dim) { return VarSet(0, false, dim); }

  int n_indices() const { return n_; }
  bool has_t() const { return has_t_; }
  int n_chart() const { return chart_; }
  int id_count() const { return 1 + 3 * n_ + chart_; }

  VarSet with_t(bool on) const { return VarSet(n_, on, chart_); }

  static constexpr VarId t() { return 0; }
  VarId var(Letter letter, int index) const;
  VarId x(int i) const { return var(Letter::X, i); }
  VarId y(int i) const { return var(Letter::Y, i); }
  VarId z(int i) const { return var(Letter::Z, i); }
  VarId u(int k) const { return var(Letter::U, k); }

  bool contains(VarId id) const;
  Letter letter(VarId id) const;
  /// 1-based index for x/y/z/u variables, 0 for t.
  int index(VarId id) const;
  std::string name(VarId id) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  int n_ = 0;
  bool has_t_ = false;
  int chart_ = 0;
};

/// Exponent vector over the fixed variable layout. Byte-wise comparison of the
/// exponent array is lex with t highest, then x_1 > y_1 > z_1 > x_2 > ...
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId id, int power = 1);

  std::uint8_t operator[](VarId id) const { return exp_[id]; }
  void set(VarId id, int power);

  int degree() const;
  bool is_one() const;
  /// Bit i set iff variable i has nonzero exponent.
  std::uint32_t support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  const std::array<std::uint8_t, kMaxVars>& exponents() const { return exp_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exp_ <=> b.exp_;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace tenscert::algebra
