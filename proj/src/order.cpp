#include "dnc/order.hpp"

#include <vector>

#include "dnc/error.hpp"

namespace dnc {

namespace {

void densify(const Monomial& m, int nvars, std::vector<int>& out) {
  out.assign(nvars, 0);
  for (auto& [v, e] : m.exponents()) {
    if (v >= nvars) fail(Errc::Internal, "monomial variable outside ring");
    out[v] = e;
  }
}

// graded reverse lexicographic on indices [lo, hi)
int degrevlex_range(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) da += a[i], db += b[i];
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger exponent in later var is smaller
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b, int nvars) const {
  if (a == b) return 0;
  thread_local std::vector<int> da, db;
  densify(a, nvars, da);
  densify(b, nvars, db);
  switch (kind) {
    case Kind::degrevlex:
      return degrevlex_range(da, db, 0, nvars);
    case Kind::lex:
      for (int i = 0; i < nvars; ++i)
        if (da[i] != db[i]) return da[i] > db[i] ? 1 : -1;
      return 0;
    case Kind::block: {
      if (split < 0 || split > nvars) fail(Errc::Internal, "bad block split");
      int c = degrevlex_range(da, db, split, nvars);
      if (c != 0) return c;
      return degrevlex_range(da, db, 0, split);
    }
  }
  return 0;
}

const char* order_name(MonomialOrder::Kind kind) {
  switch (kind) {
    case MonomialOrder::Kind::degrevlex: return "degrevlex";
    case MonomialOrder::Kind::lex: return "lex";
    case MonomialOrder::Kind::block: return "block";
  }
  return "?";
}

}  // namespace dnc
