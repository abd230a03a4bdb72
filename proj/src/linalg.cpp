#include "linalg.hpp"

namespace digitfn {

RatMat identity_mat(size_t n) {
  RatMat m(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat zero_mat(size_t rows, size_t cols) { return RatMat(rows, RatVec(cols, Rat(0))); }

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RatMat c = zero_mat(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

RatVec vec_mat(const RatVec& x, const RatMat& a) {
  size_t m = a.empty() ? 0 : a[0].size();
  RatVec y(m, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m; ++j) y[j] += x[i] * a[i][j];
  }
  return y;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMat outer(const RatVec& col, const RatVec& row) {
  RatMat m = zero_mat(col.size(), row.size());
  for (size_t i = 0; i < col.size(); ++i)
    for (size_t j = 0; j < row.size(); ++j) m[i][j] = col[i] * row[j];
  return m;
}

RatMat mat_pow(const RatMat& a, unsigned e) {
  RatMat out = identity_mat(a.size());
  for (unsigned i = 0; i < e; ++i) out = mat_mul(out, a);
  return out;
}

bool mat_equal(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool vec_is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

size_t mat_rank(RatMat a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    Rat p = a[rank][col];
    for (size_t j = col; j < cols; ++j) a[rank][j] /= p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

RatVec solve_linear(RatMat a, RatVec b) {
  size_t n = a.size();
  if (n == 0) return {};
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail(Errc::singular, "singular linear system");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    Rat p = a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] /= p;
    b[col] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

bool Span::insert(const RatVec& v) {
  RatVec w = v;
  RatVec combo(basis_.size() + 1, Rat(0));
  combo.back() = 1;  // w = v - reductions; start as pure v
  for (size_t i = 0; i < echelon_.size(); ++i) {
    const Rat& lead = w[pivots_[i]];
    if (lead == 0) continue;
    Rat f = lead / echelon_[i][pivots_[i]];
    for (size_t j = 0; j < w.size(); ++j) w[j] -= f * echelon_[i][j];
    for (size_t j = 0; j < combo_[i].size(); ++j) combo[j] -= f * combo_[i][j];
  }
  size_t piv = 0;
  while (piv < w.size() && w[piv] == 0) ++piv;
  if (piv == w.size()) return false;
  basis_.push_back(v);
  echelon_.push_back(std::move(w));
  pivots_.push_back(piv);
  for (auto& c : combo_) c.push_back(Rat(0));
  combo_.push_back(std::move(combo));
  return true;
}

bool Span::contains(const RatVec& v) const {
  RatVec w = v;
  for (size_t i = 0; i < echelon_.size(); ++i) {
    const Rat& lead = w[pivots_[i]];
    if (lead == 0) continue;
    Rat f = lead / echelon_[i][pivots_[i]];
    for (size_t j = 0; j < w.size(); ++j) w[j] -= f * echelon_[i][j];
  }
  return vec_is_zero(w);
}

std::optional<RatVec> Span::coordinates(const RatVec& v) const {
  RatVec w = v;
  RatVec coords(basis_.size(), Rat(0));
  for (size_t i = 0; i < echelon_.size(); ++i) {
    const Rat& lead = w[pivots_[i]];
    if (lead == 0) continue;
    Rat f = lead / echelon_[i][pivots_[i]];
    for (size_t j = 0; j < w.size(); ++j) w[j] -= f * echelon_[i][j];
    for (size_t j = 0; j < basis_.size(); ++j) coords[j] += f * combo_[i][j];
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

}  // namespace digitfn
