#pragma once

// AlmostComplexStructure: a matrix field J with pointwise J^2 = -Id,
// validated on construction over random interior samples.

#include <random>

#include "acg/derive.hpp"
#include "acg/field.hpp"

namespace acg {

struct Tols {
  double alg = 1e-9;   // identities through exact derivatives
  double fd = 1e-4;    // identities through the finite-difference oracle
};

class AlmostComplexStructure {
 public:
  // Validates max_p |J(p)^2 + Id| over `samples` random interior points.
  // Structures failing the tolerance are rejected, not repaired.
  AlmostComplexStructure(MatPtr J, double tol = 1e-9, int samples = 200, uint64_t seed = 7,
                         double margin = 0.05);

  // Validation over an explicit point list (used by grid-backed generators).
  AlmostComplexStructure(MatPtr J, const std::vector<Vec<double>>& points, double tol);

  const Chart& chart() const { return J_->chart(); }
  int dim() const { return J_->rows(); }
  const MatField& field() const { return *J_; }
  const MatPtr& ptr() const { return J_; }

  template <class T> Mat<T> at(const Vec<T>& p) const { return J_->at(p); }

 private:
  MatPtr J_;
};

// Components of a 2x2-blocked square matrix over a split chart.
struct Blocks {
  Mat<double> A, B, C, D;  // A: xx, B: yx (lower-left), C: xy (upper-right), D: yy
};
Blocks split_blocks(const Mat<double>& m, int base_dim);

// eval_field: value of a tensor-valued field at p with domain checking.
Mat<double> eval_field(const MatField& f, const Vec<double>& p);
Vec<double> eval_field(const VecField& f, const Vec<double>& p);
double eval_field(const ScalarField& f, const Vec<double>& p);

struct DirDerivResult {
  Vec<double> value;   // flattened components
  bool exact;          // false when the finite-difference fallback was used
};

// directional_derivative with result metadata; falls back to central
// differences only when the backing declares inexact derivatives and
// `allow_fd` is set, otherwise throws CapabilityError.
DirDerivResult directional_derivative(const ScalarField& f, const Vec<double>& p,
                                      const Vec<double>& dir, bool allow_fd = true);

}  // namespace acg
