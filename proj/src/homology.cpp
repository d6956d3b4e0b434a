#include "dnc/homology.hpp"

#include <algorithm>

namespace dnc {

namespace {

// Variables are split into normally enumerated ones (internal degree >= 1, or
// odd) and "balance" variables: even, hdeg 0, internal degree 0, nonzero
// weight, all of one sign. The latter carry no internal degree, so their
// exponents are pinned by the weight equation at the end of the walk.
struct EnumPlan {
  std::vector<int> walk;     // variable indices enumerated by DFS
  std::vector<int> balance;  // intdeg-0 weight solver block
  int balance_sign = 0;
};

EnumPlan plan_enumeration(const SemifreeCDGA& A) {
  EnumPlan plan;
  for (int v = 0; v < A.nvars(); ++v) {
    if (A.intdeg_of_var(v) == 0 && !A.odd(v)) {
      if (A.hdeg_of_var(v) != 0 || A.weight_of_var(v) == 0)
        fail(Errc::CutoffTooSmall,
             "variable '" + A.full()->name(v) + "' makes degree slices infinite");
      int s = A.weight_of_var(v) > 0 ? 1 : -1;
      if (plan.balance_sign == 0) plan.balance_sign = s;
      if (s != plan.balance_sign)
        fail(Errc::CutoffTooSmall, "mixed-sign weight-balance variables; slices are infinite");
      plan.balance.push_back(v);
    } else {
      plan.walk.push_back(v);
    }
  }
  return plan;
}

void solve_balance(const SemifreeCDGA& A, const EnumPlan& plan, size_t pos, int weight_residual,
                   Monomial acc, std::vector<Monomial>& out) {
  if (pos == plan.balance.size()) {
    if (weight_residual == 0) out.push_back(acc);
    return;
  }
  int v = plan.balance[pos];
  int w = A.weight_of_var(v);
  int max_e = 0;
  if (weight_residual != 0 && (w > 0) == (weight_residual > 0)) max_e = weight_residual / w;
  for (int e = 0; e <= max_e; ++e)
    solve_balance(A, plan, pos + 1, weight_residual - e * w,
                  e > 0 ? acc * Monomial::var(v, e) : acc, out);
}

void enumerate_walk(const SemifreeCDGA& A, const EnumPlan& plan, size_t pos, int hdeg_target,
                    int weight_target, int intdeg_budget, int hdeg_acc, int weight_acc,
                    Monomial acc, std::vector<Monomial>& out) {
  if (hdeg_acc > hdeg_target) return;
  if (pos == plan.walk.size()) {
    if (hdeg_acc != hdeg_target) return;
    int residual = weight_target - weight_acc;
    if (plan.balance.empty()) {
      if (residual == 0) out.push_back(acc);
    } else {
      if (residual != 0 && plan.balance_sign * residual < 0) return;
      solve_balance(A, plan, 0, residual, acc, out);
    }
    return;
  }
  int v = plan.walk[pos];
  int dv = A.intdeg_of_var(v);
  int kv = A.hdeg_of_var(v);
  int cap;
  if (A.odd(v))
    cap = 1;
  else if (dv > 0)
    cap = intdeg_budget / dv;
  else
    cap = (kv > 0 && hdeg_target >= hdeg_acc) ? (hdeg_target - hdeg_acc) / kv : 0;
  for (int e = 0; e <= cap; ++e) {
    if (kv > 0 && hdeg_acc + e * kv > hdeg_target) break;
    if (dv > 0 && e * dv > intdeg_budget) break;
    enumerate_walk(A, plan, pos + 1, hdeg_target, weight_target, intdeg_budget - e * dv,
                   hdeg_acc + e * kv, weight_acc + e * A.weight_of_var(v),
                   e > 0 ? acc * Monomial::var(v, e) : acc, out);
  }
}

}  // namespace

int max_differential_degree(const SemifreeCDGA& A) {
  int d = 0;
  for (int v = 0; v < A.nvars(); ++v)
    for (auto& t : A.diff_of_var(v).terms()) d = std::max(d, A.intdeg_of(t.mon));
  return d;
}

std::map<int, std::vector<Monomial>> slice_basis(const SemifreeCDGA& A, int hdeg, int weight,
                                                 int cutoff) {
  EnumPlan plan = plan_enumeration(A);
  std::vector<Monomial> all;
  enumerate_walk(A, plan, 0, hdeg, weight, cutoff, 0, 0, Monomial::one(), all);
  std::map<int, std::vector<Monomial>> by_degree;
  for (auto& m : all) by_degree[A.intdeg_of(m)].push_back(m);
  for (auto& [d, v] : by_degree) std::sort(v.begin(), v.end());
  return by_degree;
}

WeightPiece weight_piece(const SemifreeCDGA& A, int weight, int cutoff) {
  HomogenizeResult hr = homogenize(A);
  WeightPiece piece;
  piece.homogenized = hr.changed;
  int kmax = max_relevant_hdeg(hr.algebra, cutoff);
  for (int k = 0; k <= kmax; ++k)
    for (auto& [d, mons] : slice_basis(hr.algebra, k, weight, cutoff))
      if (!mons.empty()) piece.basis[{k, d}] = mons;
  return piece;
}

std::map<int, long> chain_dimensions(const SemifreeCDGA& A, int hdeg, int weight, int cutoff) {
  std::map<int, long> out;
  for (auto& [d, v] : slice_basis(A, hdeg, weight, cutoff))
    out[d] = static_cast<long>(v.size());
  return out;
}

int max_relevant_hdeg(const SemifreeCDGA& A, int cutoff) {
  int k = 0;
  for (int v = 0; v < A.nvars(); ++v) {
    if (A.odd(v))
      k += A.hdeg_of_var(v);
    else if (A.hdeg_of_var(v) > 0) {
      int copies = A.intdeg_of_var(v) > 0 ? cutoff / A.intdeg_of_var(v) : 0;
      k += A.hdeg_of_var(v) * copies;
    }
  }
  return k;
}

QMatrix QMatrix::zero(int r, int c) {
  QMatrix m;
  m.rows = r;
  m.cols = c;
  m.a.assign(r, std::vector<Rational>(c, 0));
  return m;
}

int rank(QMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m.a[r], m.a[pivot]);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.a[i][c] == 0) continue;
      Rational f = m.a[i][c] / m.a[r][c];
      for (int j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  // reduced row echelon form, then back-substitute free columns
  QMatrix e = m;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < e.cols && r < e.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < e.rows; ++i)
      if (e.a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(e.a[r], e.a[pivot]);
    Rational inv = Rational(1) / e.a[r][c];
    for (int j = c; j < e.cols; ++j) e.a[r][j] *= inv;
    for (int i = 0; i < e.rows; ++i) {
      if (i == r || e.a[i][c] == 0) continue;
      Rational f = e.a[i][c];
      for (int j = c; j < e.cols; ++j) e.a[i][j] -= f * e.a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(e.cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < e.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(e.cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -e.a[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix differential_matrix(const SemifreeCDGA& A, int /*hdeg*/, int /*weight*/, int /*intdeg*/,
                            const std::vector<Monomial>& source,
                            const std::vector<Monomial>& target) {
  std::map<Monomial, int> index;
  for (size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
  QMatrix m = QMatrix::zero(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (size_t j = 0; j < source.size(); ++j) {
    Polynomial img = A.d(Polynomial::from_monomial(A.full(), source[j], 1));
    for (auto& t : img.terms()) {
      auto it = index.find(t.mon);
      if (it == index.end()) fail(Errc::Internal, "differential leaves the slice");
      m.a[it->second][j] = t.coeff;
    }
  }
  return m;
}

HomologyTable homology_table(const SemifreeCDGA& A, int hdeg_lo, int hdeg_hi, int weight_lo,
                             int weight_hi, int cutoff) {
  HomogenizeResult hr = homogenize(A);
  const SemifreeCDGA& H = hr.algebra;
  HomologyTable table;
  table.cutoff = cutoff;
  table.homogenized = hr.changed;
  table.certified_band = cutoff - max_differential_degree(H);
  if (table.certified_band < 0)
    fail(Errc::CutoffTooSmall, "cutoff below the differential degree; certified band is empty");

  for (int w = weight_lo; w <= weight_hi; ++w) {
    // bases for k in [lo, hi+1] to see boundaries into the top row
    std::map<int, std::map<int, std::vector<Monomial>>> bases;
    for (int k = std::max(0, hdeg_lo - 1); k <= hdeg_hi + 1; ++k)
      bases[k] = slice_basis(H, k, w, cutoff);
    for (int k = hdeg_lo; k <= hdeg_hi; ++k) {
      for (int d = 0; d <= cutoff; ++d) {
        auto cur = bases[k].find(d);
        long dim_c = cur == bases[k].end() ? 0 : static_cast<long>(cur->second.size());
        if (dim_c == 0) {
          table.dims[{k, w, d}] = 0;
          continue;
        }
        const std::vector<Monomial>& source = cur->second;
        std::vector<Monomial> below, above;
        if (k > 0) {
          auto it = bases[k - 1].find(d);
          if (it != bases[k - 1].end()) below = it->second;
        }
        {
          auto it = bases[k + 1].find(d);
          if (it != bases[k + 1].end()) above = it->second;
        }
        int rank_out = 0;
        if (!below.empty()) rank_out = rank(differential_matrix(H, k, w, d, source, below));
        int rank_in = 0;
        if (!above.empty()) rank_in = rank(differential_matrix(H, k + 1, w, d, above, source));
        table.dims[{k, w, d}] = dim_c - rank_out - rank_in;
      }
    }
  }
  return table;
}

bool HomologyTable::equal_within_band(const HomologyTable& other) const {
  int band = std::min(certified_band, other.certified_band);
  auto keys = dims;
  for (auto& [k, v] : other.dims) keys.emplace(k, 0);
  for (auto& [key, unused] : keys) {
    (void)unused;
    if (std::get<2>(key) > band) continue;
    if (dim(std::get<0>(key), std::get<1>(key), std::get<2>(key)) !=
        other.dim(std::get<0>(key), std::get<1>(key), std::get<2>(key)))
      return false;
  }
  return true;
}

HkSurjectivityReport hk_surjective(const SemifreeCDGA& src_raw, const SemifreeCDGA& dst_raw,
                                   const std::map<std::string, std::string>& images, int hdeg,
                                   int weight, int cutoff) {
  HomogenizeResult hs = homogenize(src_raw);
  HomogenizeResult hd = homogenize(dst_raw);
  const SemifreeCDGA& S = hs.algebra;
  const SemifreeCDGA& D = hd.algebra;

  std::map<std::string, std::string> imgs = images;
  if (hs.changed) imgs[hs.h_name] = hd.changed ? hd.h_name : "1";
  CDGAHom hom = make_hom(S, D, imgs);
  std::string witness;
  if (!hom.commutes_with_d(&witness))
    fail(Errc::Internal, "morphism does not commute with d at '" + witness + "'");

  // most negative internal-degree jump of the morphism
  int delta_min = 0;
  for (int v = 0; v < S.nvars(); ++v) {
    auto it = hom.images.find(v);
    if (it == hom.images.end()) continue;
    for (auto& t : it->second.terms())
      delta_min = std::min(delta_min, D.intdeg_of(t.mon) - S.intdeg_of_var(v));
  }

  HkSurjectivityReport report;
  report.band = std::min(cutoff - max_differential_degree(S), cutoff - max_differential_degree(D)) +
                std::min(0, delta_min);
  if (report.band < 0)
    fail(Errc::CutoffTooSmall, "certified band for the homology comparison is empty");

  auto src_slices = slice_basis(S, hdeg, weight, cutoff);
  auto src_below = slice_basis(S, hdeg - 1, weight, cutoff);
  auto dst_slices = slice_basis(D, hdeg, weight, cutoff);
  auto dst_below = slice_basis(D, hdeg - 1, weight, cutoff);
  auto dst_above = slice_basis(D, hdeg + 1, weight, cutoff);

  // collect images of all source cycles, bucketed by target degree
  std::map<int, std::vector<Polynomial>> image_by_degree;
  for (auto& [ds, basis] : src_slices) {
    std::vector<Monomial> below =
        src_below.count(ds) ? src_below[ds] : std::vector<Monomial>{};
    QMatrix dmat = differential_matrix(S, hdeg, weight, ds, basis, below);
    for (auto& kv : kernel_basis(dmat)) {
      Polynomial cycle = Polynomial::zero(S.full());
      for (size_t j = 0; j < basis.size(); ++j)
        if (kv[j] != 0)
          cycle = cycle + Polynomial::from_monomial(S.full(), basis[j], kv[j]);
      Polynomial img = hom.apply(cycle);
      // split by internal degree
      std::map<int, Polynomial> parts;
      for (auto& t : img.terms()) {
        int d = D.intdeg_of(t.mon);
        auto [it, fresh] = parts.try_emplace(d, Polynomial::zero(D.full()));
        it->second = it->second + Polynomial::from_monomial(D.full(), t.mon, t.coeff);
      }
      for (auto& [d, part] : parts) image_by_degree[d].push_back(part);
    }
  }

  for (int d = 0; d <= report.band; ++d) {
    auto it = dst_slices.find(d);
    long dim_c = it == dst_slices.end() ? 0 : static_cast<long>(it->second.size());
    if (dim_c == 0) continue;
    const std::vector<Monomial>& basis = it->second;
    std::vector<Monomial> below = dst_below.count(d) ? dst_below[d] : std::vector<Monomial>{};
    std::vector<Monomial> above = dst_above.count(d) ? dst_above[d] : std::vector<Monomial>{};
    QMatrix dmat = differential_matrix(D, hdeg, weight, d, basis, below);
    long dim_cycles = static_cast<long>(kernel_basis(dmat).size());
    if (dim_cycles == 0) continue;

    // span of boundaries plus cycle images, as columns over the slice basis
    std::map<Monomial, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    std::vector<std::vector<Rational>> cols;
    if (!above.empty()) {
      QMatrix bmat = differential_matrix(D, hdeg + 1, weight, d, above, basis);
      for (int j = 0; j < bmat.cols; ++j) {
        std::vector<Rational> col(basis.size(), 0);
        for (int i = 0; i < bmat.rows; ++i) col[i] = bmat.a[i][j];
        cols.push_back(std::move(col));
      }
    }
    auto imgs_it = image_by_degree.find(d);
    if (imgs_it != image_by_degree.end()) {
      for (auto& p : imgs_it->second) {
        std::vector<Rational> col(basis.size(), 0);
        for (auto& t : p.terms()) {
          auto f = index.find(t.mon);
          if (f == index.end()) fail(Errc::Internal, "image leaves the slice");
          col[f->second] = t.coeff;
        }
        cols.push_back(std::move(col));
      }
    }
    QMatrix span = QMatrix::zero(static_cast<int>(basis.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < basis.size(); ++i) span.a[i][j] = cols[j][i];
    if (rank(span) < dim_cycles) {
      report.surjective = false;
      report.failures.push_back({weight, d});
    }
  }
  return report;
}

}  // namespace dnc
