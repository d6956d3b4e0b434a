#pragma once
#include <map>
#include <tuple>
#include <vector>

#include "dnc/cdga.hpp"

namespace dnc {

// Truncated homology dimensions of a semifree cdga, sliced by
// (homological degree, weight, internal degree <= cutoff). Entries with
// internal degree above the certified band are provisional.
struct HomologyTable {
  int cutoff = 0;
  int certified_band = 0;
  bool homogenized = false;
  std::map<std::tuple<int, int, int>, long> dims;

  long dim(int hdeg, int weight, int intdeg) const {
    auto it = dims.find({hdeg, weight, intdeg});
    return it == dims.end() ? 0 : it->second;
  }
  bool provisional(int intdeg) const { return intdeg > certified_band; }
  bool equal_within_band(const HomologyTable& other) const;
};

// max internal degree appearing in any differential image (0 if all zero)
int max_differential_degree(const SemifreeCDGA& A);

// monomial basis of the (hdeg, weight) slice in internal degrees <= cutoff,
// bucketed by exact internal degree; the algebra must have homogeneous
// differentials for homology use (callers homogenize first)
std::map<int, std::vector<Monomial>> slice_basis(const SemifreeCDGA& A, int hdeg, int weight,
                                                 int cutoff);

// the full weight-w piece: Q-bases per (hdeg, internal degree <= cutoff),
// computed on homogenize(A)
struct WeightPiece {
  bool homogenized = false;
  std::map<std::pair<int, int>, std::vector<Monomial>> basis;  // (hdeg, intdeg)
};

WeightPiece weight_piece(const SemifreeCDGA& A, int weight, int cutoff);

// dimensions of the chain groups per internal degree
std::map<int, long> chain_dimensions(const SemifreeCDGA& A, int hdeg, int weight, int cutoff);

// homology of homogenize(A) over the requested window
HomologyTable homology_table(const SemifreeCDGA& A, int hdeg_lo, int hdeg_hi, int weight_lo,
                             int weight_hi, int cutoff);

// largest homological degree in which chains can be nonzero (odd generators
// plus cutoff-bounded contributions of higher even cells)
int max_relevant_hdeg(const SemifreeCDGA& A, int cutoff);

// --- exact linear algebra over Q ---

struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<Rational>> a;  // row-major

  static QMatrix zero(int r, int c);
};

int rank(QMatrix m);
// basis of ker(m) as column vectors
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// matrix of d restricted to the (hdeg, weight, intdeg) slice, with rows
// indexed by the (hdeg-1, weight, intdeg) basis
QMatrix differential_matrix(const SemifreeCDGA& A, int hdeg, int weight, int intdeg,
                            const std::vector<Monomial>& source,
                            const std::vector<Monomial>& target);

// Surjectivity of H_k(hom) in weight `weight`, checked per internal degree
// within the certified band of both sides (shifted by the most negative
// degree jump of the morphism).
struct HkSurjectivityReport {
  bool surjective = true;
  int band = 0;
  std::vector<std::pair<int, int>> failures;  // (weight, intdeg)
};

HkSurjectivityReport hk_surjective(const SemifreeCDGA& src, const SemifreeCDGA& dst,
                                   const std::map<std::string, std::string>& images, int hdeg,
                                   int weight, int cutoff);

}  // namespace dnc
