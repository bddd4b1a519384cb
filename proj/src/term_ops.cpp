#include "tenscert/detail/term_ops.hpp"

#include <algorithm>
#include <unordered_map>

namespace tenscert::algebra::detail {

void normalize(TermList& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

TermList add(const TermList& a, const TermList& b, int sign) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = a[i].mono <=> b[j].mono;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
      ++j;
    } else {
      Rational s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
  return out;
}

TermList sub_scaled(const TermList& a, std::size_t a_from, const Rational& c, const Monomial& m,
                    const TermList& b, std::size_t b_from) {
  TermList out;
  out.reserve(a.size() - a_from + b.size() - b_from);
  std::size_t i = a_from;
  std::size_t j = b_from;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    const auto cmp = a[i].mono <=> bm;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Rational v = b[j].coeff * c;
      out.push_back({bm, -v});
      ++j;
    } else {
      Rational v = a[i].coeff;
      v.sub_mul(c, b[j].coeff);
      if (!v.is_zero()) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Rational v = b[j].coeff * c;
    out.push_back({b[j].mono * m, -v});
  }
  return out;
}

TermList mul(const TermList& a, const TermList& b) {
  if (a.empty() || b.empty()) return {};
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) acc[s.mono * t.mono] += s.coeff * t.coeff;
  TermList out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  return out;
}

TermList scale(const TermList& a, const Rational& c, const Monomial& m) {
  if (c.is_zero()) return {};
  TermList out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({t.mono * m, t.coeff * c});
  return out;
}

}  // namespace tenscert::algebra::detail
