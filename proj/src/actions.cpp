#include "tenscert/actions.hpp"

#include <set>

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

namespace {

constexpr std::array<Letter, 3> kLetters{Letter::X, Letter::Y, Letter::Z};

int letter_slot(Letter l) {
  switch (l) {
    case Letter::X: return 0;
    case Letter::Y: return 1;
    case Letter::Z: return 2;
    default: throw DomainError("not a tensorial letter");
  }
}

void require_tensorial(const Polynomial& f) {
  if (f.uses(VarSet::t())) throw DomainError("variable t is not acted on");
  if (f.vars().n_chart() != 0) throw DomainError("chart variables are not acted on");
}

}  // namespace

std::array<LetterPerm, 6> LetterPerm::all() {
  return {LetterPerm{{0, 1, 2}}, LetterPerm{{1, 0, 2}}, LetterPerm{{0, 2, 1}},
          LetterPerm{{2, 1, 0}}, LetterPerm{{1, 2, 0}}, LetterPerm{{2, 0, 1}}};
}

LetterPerm LetterPerm::inverse() const {
  LetterPerm r;
  for (int l = 0; l < 3; ++l) r.image[static_cast<std::size_t>(image[static_cast<std::size_t>(l)])] = l;
  return r;
}

LetterPerm operator*(const LetterPerm& a, const LetterPerm& b) {
  LetterPerm r;
  for (std::size_t l = 0; l < 3; ++l) r.image[l] = a.image[static_cast<std::size_t>(b.image[l])];
  return r;
}

Polynomial apply_s3(const Polynomial& f, const LetterPerm& sigma) {
  require_tensorial(f);
  const VarSet& vs = f.vars();
  TermList out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 1; i <= vs.n_indices(); ++i)
      for (Letter l : kLetters) {
        const int e = t.mono[vs.var(l, i)];
        if (e == 0) continue;
        const auto dst = kLetters[static_cast<std::size_t>(sigma.image[static_cast<std::size_t>(letter_slot(l))])];
        m.set(vs.var(dst, i), e);
      }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(vs, std::move(out));
}

Polynomial apply_index_map(const Polynomial& f, const std::map<int, int>& rho, int target_n) {
  require_tensorial(f);
  std::set<int> images;
  for (const auto& [src, dst] : rho) {
    if (dst < 1 || dst > target_n)
      throw DomainError("index map sends " + std::to_string(src) + " outside 1.." +
                        std::to_string(target_n));
    if (!images.insert(dst).second) throw DomainError("index map is not injective");
  }
  for (int i : f.indices_used())
    if (!rho.contains(i)) throw DomainError("index " + std::to_string(i) + " not in map domain");

  const VarSet& src_vs = f.vars();
  const VarSet dst_vs = VarSet::tensorial(target_n, src_vs.has_t());
  TermList out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i : f.indices_used())
      for (Letter l : kLetters) {
        const int e = t.mono[src_vs.var(l, i)];
        if (e != 0) m.set(dst_vs.var(l, rho.at(i)), e);
      }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(dst_vs, std::move(out));
}

}  // namespace tenscert::algebra
