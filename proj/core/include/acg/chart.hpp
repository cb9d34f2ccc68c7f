#pragma once

// Coordinate charts: a single box of even dimension with named coordinates,
// optional per-coordinate periodicity, and guarded random sampling.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "acg/errors.hpp"
#include "acg/linalg.hpp"

namespace acg {

class Chart {
 public:
  Chart() = default;
  Chart(std::vector<std::string> names, std::vector<double> lo, std::vector<double> hi,
        std::vector<uint8_t> periodic = {});

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  double lo(int i) const { return lo_[i]; }
  double hi(int i) const { return hi_[i]; }
  bool periodic(int i) const { return !periodic_.empty() && periodic_[i]; }

  // Index of a coordinate name, -1 if absent.
  int index_of(const std::string& name) const;

  bool contains(const Vec<double>& p, double slack = 1e-12) const;
  void require_inside(const Vec<double>& p) const;

  // Uniform point in the box shrunk by margin*(hi-lo) on each non-periodic
  // side; periodic coordinates sample the full circle.
  Vec<double> sample(std::mt19937_64& rng, double margin = 0.05) const;

  bool same_as(const Chart& o) const;

 private:
  std::vector<std::string> names_;
  std::vector<double> lo_, hi_;
  std::vector<uint8_t> periodic_;
};

// A chart split into leading base coordinates x and trailing fiber
// coordinates y; the submanifold L is {y = 0}.
struct SplitChart {
  Chart total;
  int base_dim = 0;

  int fiber_dim() const { return total.dim() - base_dim; }
  Chart base() const;
  Chart fiber() const;
  bool is_base_index(int i) const { return i < base_dim; }

  // (x, y) -> total point.
  Vec<double> embed(const Vec<double>& x, const Vec<double>& y) const;
  Vec<double> on_l(const Vec<double>& x) const { return embed(x, Vec<double>(fiber_dim())); }
};

// Index pairing of real coordinates into complex pairs: 0<->1, 2<->3, ...
inline int mate(int j) { return j ^ 1; }

// Sign of the standard action J dy_j = sign_std(j) dy_{mate(j)}.
inline double sign_std(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

// Block-diagonal standard structure on R^{2n}.
template <class T> Mat<T> std_structure_matrix(int dim) {
  Mat<T> J(dim, dim);
  for (int j = 0; j < dim; ++j) J(mate(j), j) = T(sign_std(j));
  return J;
}

}  // namespace acg
