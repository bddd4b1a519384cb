#include "tenscert/monomial_order.hpp"

#include <algorithm>
#include <sstream>

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

MonomialOrder::MonomialOrder(std::vector<VarId> ranking, std::string name)
    : ranking_(std::move(ranking)), name_(std::move(name)) {
  position_.fill(-1);
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    const VarId id = ranking_[k];
    if (id >= kMaxVars) throw ConfigError("ranking names an invalid variable");
    if (position_[id] >= 0) throw ConfigError("ranking lists a variable twice");
    position_[id] = static_cast<std::int8_t>(k);
  }
}

MonomialOrder MonomialOrder::index_descending(const VarSet& vars) {
  return index_descending_letters(vars, {Letter::X, Letter::Y, Letter::Z});
}

MonomialOrder MonomialOrder::index_descending_letters(const VarSet& vars,
                                                      std::array<Letter, 3> letters) {
  std::vector<VarId> r;
  if (vars.has_t()) r.push_back(VarSet::t());
  for (int i = vars.n_indices(); i >= 1; --i)
    for (Letter l : letters) r.push_back(vars.var(l, i));
  const bool standard = letters == std::array<Letter, 3>{Letter::X, Letter::Y, Letter::Z};
  std::string name = standard ? "lt" : "lt-shifted";
  return MonomialOrder(std::move(r), name);
}

MonomialOrder MonomialOrder::letter_major(const VarSet& vars) {
  std::vector<VarId> r;
  if (vars.has_t()) r.push_back(VarSet::t());
  for (Letter l : {Letter::X, Letter::Y, Letter::Z})
    for (int i = 1; i <= vars.n_indices(); ++i) r.push_back(vars.var(l, i));
  return MonomialOrder(std::move(r), "prec");
}

MonomialOrder MonomialOrder::parse(const std::string& spec, const VarSet& vars) {
  if (spec == "lt") return index_descending(vars);
  if (spec == "prec") return letter_major(vars);
  std::vector<VarId> r;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (item == "t") {
      r.push_back(vars.var(Letter::T, 0));
      continue;
    }
    Letter l;
    switch (item[0]) {
      case 'x': l = Letter::X; break;
      case 'y': l = Letter::Y; break;
      case 'z': l = Letter::Z; break;
      case 'u': l = Letter::U; break;
      default: throw ConfigError("unknown variable '" + item + "' in order spec");
    }
    int idx = 0;
    try {
      idx = std::stoi(item.substr(1));
    } catch (const std::exception&) {
      throw ConfigError("bad variable '" + item + "' in order spec");
    }
    try {
      r.push_back(vars.var(l, idx));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  if (r.empty()) throw ConfigError("empty order spec");
  return MonomialOrder(std::move(r), spec);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  return to_ranked(a) <=> to_ranked(b);
}

Monomial MonomialOrder::to_ranked(const Monomial& m) const {
  Monomial r;
  for (std::size_t id = 0; id < kMaxVars; ++id) {
    const int e = m[static_cast<VarId>(id)];
    if (e == 0) continue;
    const int pos = position_[id];
    if (pos < 0)
      throw ConfigError("variable id " + std::to_string(id) + " is not ranked by order '" +
                        name_ + "'");
    r.set(static_cast<VarId>(pos), e);
  }
  return r;
}

Monomial MonomialOrder::from_ranked(const Monomial& m) const {
  Monomial r;
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    const int e = m[static_cast<VarId>(k)];
    if (e != 0) r.set(ranking_[k], e);
  }
  return r;
}

TermList MonomialOrder::to_ranked(const Polynomial& f) const {
  TermList out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({to_ranked(t.mono), t.coeff});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  return out;
}

Polynomial MonomialOrder::from_ranked(const VarSet& vars, const TermList& ranked) const {
  TermList out;
  out.reserve(ranked.size());
  for (const auto& t : ranked) out.push_back({from_ranked(t.mono), t.coeff});
  return Polynomial::from_terms(vars, std::move(out));
}

std::pair<Monomial, Rational> leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  Monomial best_ranked = ord.to_ranked(best->mono);
  for (const auto& t : f.terms()) {
    Monomial r = ord.to_ranked(t.mono);
    if (r > best_ranked) {
      best_ranked = r;
      best = &t;
    }
  }
  return {best->mono, best->coeff};
}

TermList terms_in_order(const Polynomial& f, const MonomialOrder& ord) {
  TermList ranked = ord.to_ranked(f);
  for (auto& t : ranked) t.mono = ord.from_ranked(t.mono);
  return ranked;
}

}  // namespace tenscert::algebra
