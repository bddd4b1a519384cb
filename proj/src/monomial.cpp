#include "tenscert/monomial.hpp"

#include <string_view>

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

VarSet::VarSet(int n_indices, bool has_t, int n_chart)
    : n_(n_indices), has_t_(has_t), chart_(n_chart) {
  if (n_indices < 0 || n_chart < 0) throw ConfigError("negative variable count");
  if (1 + 3 * n_indices + n_chart > static_cast<int>(kMaxVars))
    throw ConfigError("too many variables: N=" + std::to_string(n_indices) +
                      ", chart dim=" + std::to_string(n_chart));
}

VarId VarSet::var(Letter letter, int index) const {
  switch (letter) {
    case Letter::T:
      if (!has_t_) throw DomainError("variable t not in this ring");
      return 0;
    case Letter::X:
    case Letter::Y:
    case Letter::Z: {
      if (index < 1 || index > n_)
        throw DomainError("index " + std::to_string(index) + " out of range 1.." +
                          std::to_string(n_));
      const int offset = letter == Letter::X ? 0 : (letter == Letter::Y ? 1 : 2);
      return static_cast<VarId>(1 + 3 * (index - 1) + offset);
    }
    case Letter::U:
      if (index < 1 || index > chart_)
        throw DomainError("chart coordinate " + std::to_string(index) +
                          " out of range 1.." + std::to_string(chart_));
      return static_cast<VarId>(3 * n_ + index);
  }
  throw DomainError("bad letter");
}

bool VarSet::contains(VarId id) const {
  if (id == 0) return has_t_;
  return id < id_count();
}

Letter VarSet::letter(VarId id) const {
  if (id == 0) return Letter::T;
  if (id <= 3 * n_) {
    switch ((id - 1) % 3) {
      case 0: return Letter::X;
      case 1: return Letter::Y;
      default: return Letter::Z;
    }
  }
  return Letter::U;
}

int VarSet::index(VarId id) const {
  if (id == 0) return 0;
  if (id <= 3 * n_) return (id - 1) / 3 + 1;
  return id - 3 * n_;
}

std::string VarSet::name(VarId id) const {
  static constexpr std::string_view kLetters = "txyzu";
  const Letter l = letter(id);
  if (l == Letter::T) return "t";
  return std::string(1, kLetters[static_cast<int>(l)]) + std::to_string(index(id));
}

Monomial Monomial::var(VarId id, int power) {
  Monomial m;
  m.set(id, power);
  return m;
}

void Monomial::set(VarId id, int power) {
  if (power < 0 || power > 255) throw DomainError("exponent out of range");
  exp_[id] = static_cast<std::uint8_t>(power);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exp_)
    if (e != 0) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0) mask |= (1u << i);
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = unsigned(exp_[i]) + o.exp_[i];
    if (s > 255) throw DomainError("exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (o.exp_[i] > exp_[i]) throw DomainError("monomial quotient is not exact");
    r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - o.exp_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(exp_[i], o.exp_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(exp_[i], o.exp_[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  // FNV-1a over the exponent bytes
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tenscert::algebra
