#include "tenscert/detail/ranked.hpp"

namespace tenscert::groebner::detail {

void make_monic(TermList& p) {
  if (p.empty() || p.front().coeff.is_one()) return;
  const Rational inv = Rational(1) / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

int find_divisor(const Monomial& m, const std::vector<RankedPoly>& divisors, std::size_t count) {
  const std::uint32_t mask = m.support();
  for (std::size_t k = 0; k < count; ++k) {
    const RankedPoly& g = divisors[k];
    if ((g.lead_mask & ~mask) != 0) continue;
    if (g.lead().divides(m)) return static_cast<int>(k);
  }
  return -1;
}

TermList reduce_full(TermList p, const std::vector<RankedPoly>& divisors, std::size_t count,
                     StepCounter& counter) {
  TermList rem;
  std::size_t off = 0;
  while (off < p.size()) {
    const int k = find_divisor(p[off].mono, divisors, count);
    if (k < 0) {
      rem.push_back(std::move(p[off]));
      ++off;
      continue;
    }
    counter.tick();
    const TermList& g = divisors[static_cast<std::size_t>(k)].terms;
    const Monomial q = p[off].mono / g.front().mono;
    const Rational c = p[off].coeff;
    p = algebra::detail::sub_scaled(p, off + 1, c, q, g, 1);
    off = 0;
  }
  return rem;
}

TermList s_poly(const RankedPoly& f, const RankedPoly& g) {
  const Monomial l = f.lead().lcm(g.lead());
  const Monomial mf = l / f.lead();
  const Monomial mg = l / g.lead();
  TermList a;
  a.reserve(f.terms.size() - 1);
  for (std::size_t i = 1; i < f.terms.size(); ++i)
    a.push_back({f.terms[i].mono * mf, f.terms[i].coeff});
  return algebra::detail::sub_scaled(a, 0, Rational(1), mg, g.terms, 1);
}

}  // namespace tenscert::groebner::detail
