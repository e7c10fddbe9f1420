#include "bicomm/linalg.hpp"

#include <algorithm>

#include "bicomm/orders.hpp"

namespace bicomm {

Poly Echelon::reduce(const Poly& p) const {
  Poly r = p;
  for (const auto& t : p.terms()) {
    auto it = pivot_.find(t.mono);
    if (it != pivot_.end()) r.add_scaled(-t.coef, rows_[it->second]);
  }
  return r;
}

bool Echelon::insert(const Poly& p) {
  Poly r = reduce(p);
  if (r.is_zero()) return false;
  r = r.monic();
  const Monomial& lead = r.leading().mono;
  for (auto& row : rows_) {
    Scalar c = row.coefficient(lead);
    if (!c.is_zero()) row.add_scaled(-c, r);
  }
  pivot_.emplace(lead, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<Poly> Echelon::rows() const {
  std::vector<Poly> out = rows_;
  std::sort(out.begin(), out.end(),
            [](const Poly& a, const Poly& b) { return weight_compare(a.leading().mono, b.leading().mono) > 0; });
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(Field field, const Matrix& a, const Vector& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, cols);
  LinearSolution sol;
  bool consistent = true;
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (!aug[r][cols].is_zero()) consistent = false;
  if (consistent) {
    Vector x(cols, Scalar::zero(field));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    sol.particular = std::move(x);
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, Scalar::zero(field));
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug[r][free];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(Field, Matrix a) {
  std::size_t cols = a.empty() ? 0 : a.front().size();
  return rref(a, cols).size();
}

}  // namespace bicomm
