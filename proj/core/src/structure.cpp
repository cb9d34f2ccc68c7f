#include "acg/structure.hpp"

#include <sstream>

namespace acg {
namespace {

void validate_square(const MatPtr& J) {
  if (!J) throw ChartError("null structure field");
  if (J->rows() != J->cols() || J->rows() != J->chart().dim())
    throw ChartError("structure matrix must be dim x dim on its chart");
}

void check_points(const MatField& J, const std::vector<Vec<double>>& pts, double tol) {
  double worst = 0;
  for (const auto& p : pts) {
    Mat<double> m = J.at(p);
    Mat<double> r = m * m + Mat<double>::identity(m.rows());
    worst = std::max(worst, norm_inf(r));
  }
  if (worst > tol) {
    std::ostringstream os;
    os << "J*J + Id residual " << worst << " exceeds tolerance " << tol << "; structure rejected";
    throw ContractError(os.str());
  }
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(MatPtr J, double tol, int samples, uint64_t seed,
                                               double margin)
    : J_(std::move(J)) {
  validate_square(J_);
  std::mt19937_64 rng(seed);
  std::vector<Vec<double>> pts;
  pts.reserve(samples);
  for (int i = 0; i < samples; ++i) pts.push_back(J_->chart().sample(rng, margin));
  check_points(*J_, pts, tol);
}

AlmostComplexStructure::AlmostComplexStructure(MatPtr J, const std::vector<Vec<double>>& points,
                                               double tol)
    : J_(std::move(J)) {
  validate_square(J_);
  check_points(*J_, points, tol);
}

Blocks split_blocks(const Mat<double>& m, int base_dim) {
  int n = m.rows(), f = n - base_dim;
  Blocks b{Mat<double>(base_dim, base_dim), Mat<double>(f, base_dim), Mat<double>(base_dim, f),
           Mat<double>(f, f)};
  for (int i = 0; i < base_dim; ++i)
    for (int j = 0; j < base_dim; ++j) b.A(i, j) = m(i, j);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < base_dim; ++j) b.B(i, j) = m(base_dim + i, j);
  for (int i = 0; i < base_dim; ++i)
    for (int j = 0; j < f; ++j) b.C(i, j) = m(i, base_dim + j);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) b.D(i, j) = m(base_dim + i, base_dim + j);
  return b;
}

Mat<double> eval_field(const MatField& f, const Vec<double>& p) {
  f.chart().require_inside(p);
  return f.at(p);
}

Vec<double> eval_field(const VecField& f, const Vec<double>& p) {
  f.chart().require_inside(p);
  return f.at(p);
}

double eval_field(const ScalarField& f, const Vec<double>& p) {
  f.chart().require_inside(p);
  return f.at(p);
}

DirDerivResult directional_derivative(const ScalarField& f, const Vec<double>& p,
                                      const Vec<double>& dir, bool allow_fd) {
  f.chart().require_inside(p);
  if (f.exact_derivatives()) {
    double d = dir_deriv(f, p, dir);
    return {Vec<double>{d}, true};
  }
  if (!allow_fd)
    throw CapabilityError("backing provides no exact derivatives and the FD fallback is disabled");
  double d = fd_dir_deriv(f, p, dir);
  return {Vec<double>{d}, false};
}

}  // namespace acg
