#include "acg/chart.hpp"

#include <sstream>

namespace acg {

Chart::Chart(std::vector<std::string> names, std::vector<double> lo, std::vector<double> hi,
             std::vector<uint8_t> periodic)
    : names_(std::move(names)), lo_(std::move(lo)), hi_(std::move(hi)), periodic_(std::move(periodic)) {
  if (names_.empty() || names_.size() % 2 != 0)
    throw ChartError("chart dimension must be even and positive");
  if (lo_.size() != names_.size() || hi_.size() != names_.size())
    throw ChartError("chart bounds do not match dimension");
  if (!periodic_.empty() && periodic_.size() != names_.size())
    throw ChartError("periodic flags do not match dimension");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!(lo_[i] < hi_[i])) throw ChartError("empty bound interval for coordinate " + names_[i]);
    if (!periodic_.empty() && periodic_[i] && !(std::isfinite(lo_[i]) && std::isfinite(hi_[i])))
      throw ChartError("periodic coordinate needs finite bounds: " + names_[i]);
  }
}

int Chart::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool Chart::contains(const Vec<double>& p, double slack) const {
  if (p.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (periodic(i)) continue;
    double w = hi_[i] - lo_[i];
    if (p[i] < lo_[i] - slack * w || p[i] > hi_[i] + slack * w) return false;
  }
  return true;
}

void Chart::require_inside(const Vec<double>& p) const {
  if (p.size() != dim()) throw ChartError("point dimension does not match chart");
  for (int i = 0; i < dim(); ++i) {
    if (periodic(i)) continue;
    if (p[i] < lo_[i] || p[i] > hi_[i]) {
      std::ostringstream os;
      os << "coordinate " << names_[i] << " = " << p[i] << " outside [" << lo_[i] << ", " << hi_[i] << "]";
      throw DomainError(os.str());
    }
  }
}

Vec<double> Chart::sample(std::mt19937_64& rng, double margin) const {
  Vec<double> p(dim());
  for (int i = 0; i < dim(); ++i) {
    double a = lo_[i], b = hi_[i];
    if (!periodic(i)) {
      double w = b - a;
      a += margin * w;
      b -= margin * w;
    }
    std::uniform_real_distribution<double> u(a, b);
    p[i] = u(rng);
  }
  return p;
}

bool Chart::same_as(const Chart& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (names_[i] != o.names_[i] || lo_[i] != o.lo_[i] || hi_[i] != o.hi_[i] || periodic(i) != o.periodic(i))
      return false;
  return true;
}

Chart SplitChart::base() const {
  std::vector<std::string> n;
  std::vector<double> lo, hi;
  std::vector<uint8_t> per;
  for (int i = 0; i < base_dim; ++i) {
    n.push_back(total.names()[i]);
    lo.push_back(total.lo(i));
    hi.push_back(total.hi(i));
    per.push_back(total.periodic(i) ? 1 : 0);
  }
  return Chart(n, lo, hi, per);
}

Chart SplitChart::fiber() const {
  std::vector<std::string> n;
  std::vector<double> lo, hi;
  std::vector<uint8_t> per;
  for (int i = base_dim; i < total.dim(); ++i) {
    n.push_back(total.names()[i]);
    lo.push_back(total.lo(i));
    hi.push_back(total.hi(i));
    per.push_back(total.periodic(i) ? 1 : 0);
  }
  return Chart(n, lo, hi, per);
}

Vec<double> SplitChart::embed(const Vec<double>& x, const Vec<double>& y) const {
  if (x.size() != base_dim || y.size() != fiber_dim())
    throw ChartError("split point dimensions do not match chart");
  Vec<double> p(total.dim());
  for (int i = 0; i < base_dim; ++i) p[i] = x[i];
  for (int i = 0; i < fiber_dim(); ++i) p[base_dim + i] = y[i];
  return p;
}

}  // namespace acg
