#include "acg/field.hpp"

namespace acg {

ScalarPtr constant_field(Chart chart, double value) {
  return make_scalar(std::move(chart), [value]<class S>(const Vec<S>&) -> S { return S(value); });
}

ScalarPtr expression_field(Chart chart, ExprAST ast) {
  for (size_t i = 0; i < ast.vars().size(); ++i)
    if (chart.index_of(ast.vars()[i]) != static_cast<int>(i))
      throw ChartError("expression variables must match chart coordinates in order");
  return make_scalar(std::move(chart), [ast = std::move(ast)]<class S>(const Vec<S>& p) -> S {
    std::vector<S> vars(p.begin(), p.end());
    return ast.eval(vars);
  });
}

ScalarPtr expression_field(Chart chart, const std::string& text) {
  ExprAST ast = parse(text, chart.names());
  return expression_field(std::move(chart), std::move(ast));
}

VecPtr vector_from_components(const std::vector<ScalarPtr>& components) {
  if (components.empty()) throw ChartError("vector field needs components");
  Chart chart = components[0]->chart();
  for (const auto& c : components)
    if (!c->chart().same_as(chart)) throw ChartError("vector components live on different charts");
  int n = static_cast<int>(components.size());
  return make_vec(chart, n, [components]<class S>(const Vec<S>& p) -> Vec<S> {
    Vec<S> v(static_cast<int>(components.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = components[i]->at(p);
    return v;
  });
}

MatPtr constant_mat_field(Chart chart, Mat<double> value) {
  int r = value.rows(), c = value.cols();
  return make_mat(std::move(chart), r, c, [value = std::move(value)]<class S>(const Vec<S>& p) -> Mat<S> {
    (void)p;
    Mat<S> m(value.rows(), value.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = S(value(i, j));
    return m;
  });
}

MatPtr std_structure_field(Chart chart) {
  int n = chart.dim();
  return constant_mat_field(std::move(chart), std_structure_matrix<double>(n));
}

Ten3Ptr zero_connection_coeffs(Chart chart) {
  int n = chart.dim();
  return make_ten3(std::move(chart), n, n, n,
                   [n]<class S>(const Vec<S>&) -> Ten3<S> { return Ten3<S>(n, n, n); });
}

MatPtr expression_mat_field(Chart chart, const std::vector<std::vector<std::string>>& entries) {
  int r = static_cast<int>(entries.size());
  int c = r ? static_cast<int>(entries[0].size()) : 0;
  std::vector<std::vector<ExprAST>> asts(r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(entries[i].size()) != c) throw ChartError("ragged entry matrix");
    for (int j = 0; j < c; ++j) asts[i].push_back(parse(entries[i][j], chart.names()));
  }
  return make_mat(std::move(chart), r, c, [asts = std::move(asts)]<class S>(const Vec<S>& p) -> Mat<S> {
    std::vector<S> vars(p.begin(), p.end());
    Mat<S> m(static_cast<int>(asts.size()), static_cast<int>(asts[0].size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = asts[i][j].eval(vars);
    return m;
  });
}

}  // namespace acg
