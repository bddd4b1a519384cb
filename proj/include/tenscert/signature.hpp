#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tenscert::algebra {

/// Tuple over {+1, -1}: +1 tags a symmetric endomorphism, -1 a skew one.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> entries);

  /// "+-+" style; DomainError on anything else.
  static Signature parse(const std::string& text);
  static Signature constant(int n, int value);
  /// All 2^n signatures, lexicographic with +1 < -1.
  static std::vector<Signature> sweep(int n);

  int size() const { return static_cast<int>(e_.size()); }
  /// 1-based.
  int operator[](int i) const { return e_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& entries() const { return e_; }
  bool all_symmetric() const;
  bool all_skew() const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature& a, const Signature& b) {
    // +1 < -1, matching the sweep order.
    return a.key() <=> b.key();
  }

 private:
  std::vector<int> key() const;

  std::vector<int> e_;
};

}  // namespace tenscert::algebra
