#pragma once
#include "dnc/monomial.hpp"

namespace dnc {

// Monomial orders. Variable precedence is declaration order (index 0 highest).
// block(split): indices [split, nvars) form an elimination block compared
// first (degrevlex within), ties broken by degrevlex on [0, split).
struct MonomialOrder {
  enum class Kind { degrevlex, lex, block };
  Kind kind = Kind::degrevlex;
  int split = -1;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, -1}; }
  static MonomialOrder lex() { return {Kind::lex, -1}; }
  static MonomialOrder block(int split) { return {Kind::block, split}; }

  // +1 if a > b, 0 if equal, -1 if a < b
  int cmp(const Monomial& a, const Monomial& b, int nvars) const;
  bool less(const Monomial& a, const Monomial& b, int nvars) const { return cmp(a, b, nvars) < 0; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && split == o.split; }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

const char* order_name(MonomialOrder::Kind kind);

}  // namespace dnc
