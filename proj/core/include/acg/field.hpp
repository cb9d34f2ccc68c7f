#pragma once

// Field objects: immutable maps from chart points to scalars / vectors /
// matrices / rank-3 tensors, evaluable at every level of the dual tower.
// Derived fields (connections built from a structure, corrected structures,
// pulled-back structures, ...) are generic lambdas wrapped by the *Fn
// adapters below; differentiating a derived field simply pushes its inner
// evaluations one level up the tower.

#include <functional>
#include <memory>
#include <utility>

#include "acg/chart.hpp"
#include "acg/dual.hpp"
#include "acg/errors.hpp"
#include "acg/expr.hpp"
#include "acg/linalg.hpp"

namespace acg {

class ScalarField {
 public:
  explicit ScalarField(Chart chart, bool exact = true) : chart_(std::move(chart)), exact_(exact) {}
  virtual ~ScalarField() = default;
  const Chart& chart() const { return chart_; }

  // Whether dual evaluation yields exact derivatives (false for fields whose
  // backing can only finite-difference).
  bool exact_derivatives() const { return exact_; }

  virtual double at(const Vec<double>& p) const = 0;
  virtual D1 at(const Vec<D1>& p) const = 0;
  virtual D2 at(const Vec<D2>& p) const = 0;
  virtual D3 at(const Vec<D3>& p) const = 0;

 private:
  Chart chart_;
  bool exact_;
};

class VecField {
 public:
  VecField(Chart chart, int size) : chart_(std::move(chart)), size_(size) {}
  virtual ~VecField() = default;
  const Chart& chart() const { return chart_; }
  int size() const { return size_; }

  virtual Vec<double> at(const Vec<double>& p) const = 0;
  virtual Vec<D1> at(const Vec<D1>& p) const = 0;
  virtual Vec<D2> at(const Vec<D2>& p) const = 0;
  virtual Vec<D3> at(const Vec<D3>& p) const = 0;

 private:
  Chart chart_;
  int size_;
};

class MatField {
 public:
  MatField(Chart chart, int rows, int cols) : chart_(std::move(chart)), rows_(rows), cols_(cols) {}
  virtual ~MatField() = default;
  const Chart& chart() const { return chart_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  virtual Mat<double> at(const Vec<double>& p) const = 0;
  virtual Mat<D1> at(const Vec<D1>& p) const = 0;
  virtual Mat<D2> at(const Vec<D2>& p) const = 0;
  virtual Mat<D3> at(const Vec<D3>& p) const = 0;

 private:
  Chart chart_;
  int rows_, cols_;
};

class Ten3Field {
 public:
  Ten3Field(Chart chart, int n0, int n1, int n2)
      : chart_(std::move(chart)), n0_(n0), n1_(n1), n2_(n2) {}
  virtual ~Ten3Field() = default;
  const Chart& chart() const { return chart_; }
  int dim0() const { return n0_; }
  int dim1() const { return n1_; }
  int dim2() const { return n2_; }

  virtual Ten3<double> at(const Vec<double>& p) const = 0;
  virtual Ten3<D1> at(const Vec<D1>& p) const = 0;
  virtual Ten3<D2> at(const Vec<D2>& p) const = 0;
  virtual Ten3<D3> at(const Vec<D3>& p) const = 0;

 private:
  Chart chart_;
  int n0_, n1_, n2_;
};

using ScalarPtr = std::shared_ptr<const ScalarField>;
using VecPtr = std::shared_ptr<const VecField>;
using MatPtr = std::shared_ptr<const MatField>;
using Ten3Ptr = std::shared_ptr<const Ten3Field>;

template <class F>
class ScalarFn final : public ScalarField {
 public:
  ScalarFn(Chart chart, F f, bool exact) : ScalarField(std::move(chart), exact), f_(std::move(f)) {}
  double at(const Vec<double>& p) const override { return f_(p); }
  D1 at(const Vec<D1>& p) const override { return f_(p); }
  D2 at(const Vec<D2>& p) const override { return f_(p); }
  D3 at(const Vec<D3>& p) const override { return f_(p); }

 private:
  F f_;
};

template <class F>
class VecFn final : public VecField {
 public:
  VecFn(Chart chart, int size, F f) : VecField(std::move(chart), size), f_(std::move(f)) {}
  Vec<double> at(const Vec<double>& p) const override { return f_(p); }
  Vec<D1> at(const Vec<D1>& p) const override { return f_(p); }
  Vec<D2> at(const Vec<D2>& p) const override { return f_(p); }
  Vec<D3> at(const Vec<D3>& p) const override { return f_(p); }

 private:
  F f_;
};

template <class F>
class MatFn final : public MatField {
 public:
  MatFn(Chart chart, int rows, int cols, F f)
      : MatField(std::move(chart), rows, cols), f_(std::move(f)) {}
  Mat<double> at(const Vec<double>& p) const override { return f_(p); }
  Mat<D1> at(const Vec<D1>& p) const override { return f_(p); }
  Mat<D2> at(const Vec<D2>& p) const override { return f_(p); }
  Mat<D3> at(const Vec<D3>& p) const override { return f_(p); }

 private:
  F f_;
};

template <class F>
class Ten3Fn final : public Ten3Field {
 public:
  Ten3Fn(Chart chart, int n0, int n1, int n2, F f)
      : Ten3Field(std::move(chart), n0, n1, n2), f_(std::move(f)) {}
  Ten3<double> at(const Vec<double>& p) const override { return f_(p); }
  Ten3<D1> at(const Vec<D1>& p) const override { return f_(p); }
  Ten3<D2> at(const Vec<D2>& p) const override { return f_(p); }
  Ten3<D3> at(const Vec<D3>& p) const override { return f_(p); }

 private:
  F f_;
};

template <class F> ScalarPtr make_scalar(Chart chart, F f, bool exact = true) {
  return std::make_shared<ScalarFn<F>>(std::move(chart), std::move(f), exact);
}
template <class F> VecPtr make_vec(Chart chart, int size, F f) {
  return std::make_shared<VecFn<F>>(std::move(chart), size, std::move(f));
}
template <class F> MatPtr make_mat(Chart chart, int rows, int cols, F f) {
  return std::make_shared<MatFn<F>>(std::move(chart), rows, cols, std::move(f));
}
template <class F> Ten3Ptr make_ten3(Chart chart, int n0, int n1, int n2, F f) {
  return std::make_shared<Ten3Fn<F>>(std::move(chart), n0, n1, n2, std::move(f));
}

// --- common constructors -------------------------------------------------

ScalarPtr constant_field(Chart chart, double value);
ScalarPtr expression_field(Chart chart, const std::string& text);
ScalarPtr expression_field(Chart chart, ExprAST ast);

// VectorField from per-component scalar fields (all on the same chart).
VecPtr vector_from_components(const std::vector<ScalarPtr>& components);

MatPtr constant_mat_field(Chart chart, Mat<double> value);
MatPtr std_structure_field(Chart chart);
Ten3Ptr zero_connection_coeffs(Chart chart);

// Matrix field with expression-backed entries (entries[i][j] acts on column j).
MatPtr expression_mat_field(Chart chart, const std::vector<std::vector<std::string>>& entries);

}  // namespace acg
