#include "tenscert/signature.hpp"

#include <algorithm>

#include "tenscert/errors.hpp"

namespace tenscert::algebra {

Signature::Signature(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw DomainError("signature must have at least one entry");
  for (int v : e_)
    if (v != 1 && v != -1) throw DomainError("signature entries must be +1 or -1");
}

Signature Signature::parse(const std::string& text) {
  std::vector<int> e;
  for (char c : text) {
    if (c == '+') e.push_back(1);
    else if (c == '-') e.push_back(-1);
    else throw DomainError("bad signature character '" + std::string(1, c) + "'");
  }
  return Signature(std::move(e));
}

Signature Signature::constant(int n, int value) {
  return Signature(std::vector<int>(static_cast<std::size_t>(n), value));
}

std::vector<Signature> Signature::sweep(int n) {
  if (n < 1 || n > 20) throw DomainError("sweep length out of range");
  std::vector<Signature> out;
  const std::uint32_t count = 1u << n;
  out.reserve(count);
  for (std::uint32_t code = 0; code < count; ++code) {
    std::vector<int> e(static_cast<std::size_t>(n));
    // Most significant bit is the first entry, so numeric order is lex order.
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = ((code >> (n - 1 - i)) & 1u) ? -1 : 1;
    out.emplace_back(std::move(e));
  }
  return out;
}

bool Signature::all_symmetric() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 1; });
}

bool Signature::all_skew() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == -1; });
}

std::string Signature::to_string() const {
  std::string s;
  for (int v : e_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

std::vector<int> Signature::key() const {
  std::vector<int> k;
  k.reserve(e_.size());
  for (int v : e_) k.push_back(v > 0 ? 0 : 1);
  return k;
}

}  // namespace tenscert::algebra
