#include "regular.hpp"

#include <deque>

#include "digits.hpp"

namespace digitfn {

void LinearRepresentation::validate() const {
  if (q < 2) fail(Errc::parse, "representation base must be at least 2");
  if (M.size() != q) fail(Errc::parse, "representation needs one matrix per digit");
  if (u.size() != dim || v.size() != dim)
    fail(Errc::parse, "u/v length does not match dimension");
  for (const RatMat& m : M) {
    if (m.size() != dim) fail(Errc::parse, "matrix row count does not match dimension");
    for (const RatVec& row : m)
      if (row.size() != dim) fail(Errc::parse, "matrix is not square");
  }
}

Rat eval_rep(const LinearRepresentation& R, uint64_t n) {
  // w = M_{n_0} ( M_{n_1} ( ... M_{n_L} v)) built by applying the digit
  // matrices MSB first.
  RatVec w = R.v;
  Expansion e = to_expansion(n, R.q);
  for (uint8_t d : e.digits) w = mat_vec(R.M[d], w);
  return dot(R.u, w);
}

bool is_zero_insensitive(const LinearRepresentation& R) {
  return mat_vec(R.M[0], R.v) == R.v;
}

namespace {

// Left restriction: basis rows B with B M_i = A_i B; u = u' B, v' = B v.
// Right restriction mirrors it on columns.
LinearRepresentation restrict_left(const LinearRepresentation& R) {
  Span span;
  std::deque<RatVec> work;
  if (span.insert(R.u)) work.push_back(R.u);
  while (!work.empty()) {
    RatVec w = std::move(work.front());
    work.pop_front();
    for (const RatMat& M : R.M) {
      RatVec wm = vec_mat(w, M);
      if (span.insert(wm)) work.push_back(std::move(wm));
    }
  }
  const auto& basis = span.basis();
  size_t k = span.dim();
  LinearRepresentation out;
  out.q = R.q;
  out.dim = k;
  out.u = span.coordinates(R.u).value();
  out.v.resize(k);
  for (size_t i = 0; i < k; ++i) out.v[i] = dot(basis[i], R.v);
  out.M.assign(R.q, zero_mat(k, k));
  for (unsigned d = 0; d < R.q; ++d)
    for (size_t i = 0; i < k; ++i) {
      RatVec img = vec_mat(basis[i], R.M[d]);
      out.M[d][i] = span.coordinates(img).value();  // closure guarantees membership
    }
  return out;
}

LinearRepresentation restrict_right(const LinearRepresentation& R) {
  Span span;
  std::deque<RatVec> work;
  if (span.insert(R.v)) work.push_back(R.v);
  while (!work.empty()) {
    RatVec w = std::move(work.front());
    work.pop_front();
    for (const RatMat& M : R.M) {
      RatVec mw = mat_vec(M, w);
      if (span.insert(mw)) work.push_back(std::move(mw));
    }
  }
  const auto& basis = span.basis();
  size_t k = span.dim();
  LinearRepresentation out;
  out.q = R.q;
  out.dim = k;
  out.v = span.coordinates(R.v).value();
  out.u.resize(k);
  for (size_t i = 0; i < k; ++i) out.u[i] = dot(R.u, basis[i]);
  out.M.assign(R.q, zero_mat(k, k));
  for (unsigned d = 0; d < R.q; ++d) {
    // M_d C = C D_d: column j of D_d = coordinates of M_d * basis[j]
    for (size_t j = 0; j < k; ++j) {
      RatVec img = mat_vec(R.M[d], basis[j]);
      RatVec coords = span.coordinates(img).value();
      for (size_t i = 0; i < k; ++i) out.M[d][i][j] = coords[i];
    }
  }
  return out;
}

}  // namespace

LinearRepresentation minimize(const LinearRepresentation& R) {
  R.validate();
  bool zi_before = is_zero_insensitive(R);
  LinearRepresentation out = restrict_right(restrict_left(R));
  if (zi_before && !is_zero_insensitive(out))
    fail(Errc::minimization_conflict, "zero-insensitivity lost during minimization");
  return out;
}

bool quasimult_condition(const LinearRepresentation& R, unsigned r) {
  return mat_equal(mat_pow(R.M[0], r), outer(R.v, R.u));
}

QuasiMultReport check_quasimultiplicative(const LinearRepresentation& R, unsigned r) {
  QuasiMultReport rep;
  rep.r = r;
  rep.input_dim = R.dim;
  LinearRepresentation canon = minimize(R);
  rep.minimal_dim = canon.dim;
  rep.zero_insensitive_after = is_zero_insensitive(canon);
  if (!rep.zero_insensitive_after)
    fail(Errc::not_canonical, "minimized representation is not zero-insensitive");
  rep.ok = quasimult_condition(canon, r);
  return rep;
}

std::optional<unsigned> find_mult_parameter(const LinearRepresentation& R, unsigned r_max) {
  LinearRepresentation canon = minimize(R);
  if (!is_zero_insensitive(canon))
    fail(Errc::not_canonical, "minimized representation is not zero-insensitive");
  for (unsigned r = 0; r <= r_max; ++r)
    if (quasimult_condition(canon, r)) return r;
  return std::nullopt;
}

AffineClosure affine_closure(const LinearRepresentation& R, Side side) {
  R.validate();
  AffineClosure out;
  out.side = side;
  const RatVec& base = side == Side::left ? R.u : R.v;
  auto apply = [&](const RatVec& x, const RatMat& M) {
    return side == Side::left ? vec_mat(x, M) : mat_vec(M, x);
  };
  Span span;
  std::deque<RatVec> points;  // affine points still to expand
  points.push_back(base);
  while (!points.empty()) {
    RatVec p = std::move(points.front());
    points.pop_front();
    for (const RatMat& M : R.M) {
      RatVec img = apply(p, M);
      if (span.insert(vec_sub(img, base))) points.push_back(std::move(img));
    }
  }
  out.basis = span.basis();
  return out;
}

QuasiAddReport check_quasiadditive(const LinearRepresentation& R, unsigned r) {
  R.validate();
  if (!is_zero_insensitive(R))
    fail(Errc::not_canonical, "quasiadditivity test requires a zero-insensitive representation");
  QuasiAddReport rep;
  rep.r = r;
  AffineClosure U = affine_closure(R, Side::left);
  AffineClosure V = affine_closure(R, Side::right);
  rep.dim_left = U.dim();
  rep.dim_right = V.dim();

  RatMat M0r = mat_pow(R.M[0], r);
  rep.uv_zero = dot(R.u, R.v) == 0;

  RatVec M0rv = mat_vec(M0r, R.v);
  RatVec diff_v = vec_sub(M0rv, R.v);  // (M_0^r - I) v
  rep.left_orthogonal = true;
  for (const RatVec& x : U.basis)
    if (dot(x, diff_v) != 0) rep.left_orthogonal = false;

  RatVec uM0r = vec_mat(R.u, M0r);
  RatVec diff_u = vec_sub(uM0r, R.u);  // u^t (M_0^r - I)
  rep.right_orthogonal = true;
  for (const RatVec& y : V.basis)
    if (dot(diff_u, y) != 0) rep.right_orthogonal = false;

  rep.cross_zero = true;
  for (const RatVec& x : U.basis) {
    RatVec xM = vec_mat(x, M0r);
    for (const RatVec& y : V.basis)
      if (dot(xM, y) != 0) rep.cross_zero = false;
  }

  rep.ok = rep.uv_zero && rep.left_orthogonal && rep.right_orthogonal && rep.cross_zero;
  return rep;
}

}  // namespace digitfn
