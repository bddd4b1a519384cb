#include <algorithm>

#include "tenscert/groebner.hpp"

namespace tenscert::groebner {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor always has degree no larger than its multiple, so a single
  // pass against the generators already kept suffices.
  for (const auto& m : gens) {
    const bool covered =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!covered) gens_.push_back(m);
  }
  std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Monomial> lcms;
  lcms.reserve(gens_.size() * o.gens_.size());
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) lcms.push_back(a.lcm(b));
  return MonomialIdeal(std::move(lcms));
}

std::optional<Monomial> MonomialIdeal::square_witness() const {
  for (const auto& g : gens_)
    for (auto e : g.exponents())
      if (e > 1) return g;
  return std::nullopt;
}

bool MonomialIdeal::is_squarefree() const { return !square_witness().has_value(); }

}  // namespace tenscert::groebner
