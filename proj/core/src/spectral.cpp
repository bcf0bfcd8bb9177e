#include "dipolariton/spectral.hpp"

#include "dipolariton/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace dipolariton {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// lambda^3 + a lambda^2 + b lambda + c
struct Cubic {
  cplx a, b, c;

  cplx operator()(cplx x) const { return ((x + a) * x + b) * x + c; }
  cplx derivative(cplx x) const { return (3.0 * x + 2.0 * a) * x + b; }
};

Cubic characteristic(const Matrix3c& m) {
  const cplx minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                      m[1][1] * m[2][2] - m[1][2] * m[2][1];
  return Cubic{-linalg::trace(m), minors, -linalg::determinant(m)};
}

std::array<cplx, 3> cardano_roots(const Cubic& p) {
  const cplx offset = -p.a / 3.0;
  const cplx P = p.b - p.a * p.a / 3.0;
  const cplx Q = 2.0 * p.a * p.a * p.a / 27.0 - p.a * p.b / 3.0 + p.c;
  if (P == 0.0 && Q == 0.0) return {offset, offset, offset};

  const cplx s = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
  const cplx w1 = -Q / 2.0 + s;
  const cplx w2 = -Q / 2.0 - s;
  const cplx w = std::abs(w1) >= std::abs(w2) ? w1 : w2;
  const cplx u = std::polar(std::cbrt(std::abs(w)), std::arg(w) / 3.0);
  if (u == 0.0) return {offset, offset, offset};
  const cplx v = -P / (3.0 * u);

  std::array<cplx, 3> roots;
  for (int k = 0; k < 3; ++k) {
    const cplx omega = std::polar(1.0, units::kTwoPi * k / 3.0);
    roots[k] = u * omega + v * std::conj(omega) + offset;
  }
  return roots;
}

// Three real roots of a cubic with real coefficients (Hermitian input).
std::array<cplx, 3> trigonometric_roots(double a, double b, double c) {
  const double offset = -a / 3.0;
  const double P = b - a * a / 3.0;
  const double Q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  if (P >= 0.0) {
    const double t = std::cbrt(-Q);
    return {cplx(t + offset), cplx(t + offset), cplx(t + offset)};
  }
  const double m = 2.0 * std::sqrt(-P / 3.0);
  const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  std::array<cplx, 3> roots;
  for (int k = 0; k < 3; ++k) roots[k] = cplx(m * std::cos(theta - units::kTwoPi * k / 3.0) + offset);
  return roots;
}

void polish(const Cubic& p, cplx& root) {
  cplx f = p(root);
  for (int it = 0; it < 6 && f != 0.0; ++it) {
    const cplx df = p.derivative(root);
    if (df == 0.0) break;
    const cplx next = root - f / df;
    const cplx fn = p(next);
    if (!(std::abs(fn) < std::abs(f))) break;
    root = next;
    f = fn;
  }
}

bool lex_less(cplx x, cplx y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

Matrix3c shifted(const Matrix3c& m, cplx s) {
  Matrix3c r = m;
  for (int i = 0; i < 3; ++i) r[i][i] -= s;
  return r;
}

Vector3c normalized(Vector3c v) {
  const double n = linalg::norm(v);
  for (auto& x : v) x /= n;
  return v;
}

// Largest-magnitude component made real and non-negative.
Vector3c fix_phase(Vector3c v) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[k])) k = i;
  const double mag = std::abs(v[k]);
  if (mag == 0.0) return v;
  const cplx phase = std::conj(v[k]) / mag;
  for (auto& x : v) x *= phase;
  v[k] = cplx(std::abs(v[k]), 0.0);
  return v;
}

struct CrossResult {
  Vector3c v;
  double norm;
};

CrossResult best_row_cross(const Matrix3c& m) {
  const std::array<Vector3c, 3> candidates{linalg::cross(m[0], m[1]), linalg::cross(m[0], m[2]),
                                           linalg::cross(m[1], m[2])};
  CrossResult best{candidates[0], linalg::norm(candidates[0])};
  for (int i = 1; i < 3; ++i) {
    const double n = linalg::norm(candidates[i]);
    if (n > best.norm) best = {candidates[i], n};
  }
  return best;
}

// Null vector of (A - lambda I) when that matrix has rank <= 1. `avoid`, when
// given, is a vector the result must be Hermitian-orthogonal to.
Vector3c rank_deficient_null_vector(const Matrix3c& m, const Vector3c* avoid, int fallback_index) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (linalg::norm(m[i]) > linalg::norm(m[k])) k = i;
  const Vector3c& r = m[k];
  if (linalg::norm(r) == 0.0) {
    Vector3c e{};
    e[fallback_index] = 1.0;
    if (avoid == nullptr) return e;
    // Any vector orthogonal to `avoid`.
    Vector3c o = linalg::cross(linalg::conj(*avoid), e);
    if (linalg::norm(o) < 0.5) o = linalg::cross(linalg::conj(*avoid), Vector3c{e[2], e[0], e[1]});
    return linalg::conj(o);
  }
  if (avoid != nullptr) {
    const Vector3c v = linalg::cross(r, linalg::conj(*avoid));
    if (linalg::norm(v) > 1e-8 * linalg::norm(r)) return v;
  }
  int smallest = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(r[i]) < std::abs(r[smallest])) smallest = i;
  Vector3c e{};
  e[smallest] = 1.0;
  return linalg::cross(r, e);
}

Vector3c eigenvector_for(const Matrix3c& a, cplx lambda, const Vector3c* avoid, int fallback_index) {
  const Matrix3c m = shifted(a, lambda);
  const double scale = linalg::frobenius_norm(m);
  const CrossResult c = best_row_cross(m);
  if (c.norm > 64.0 * kEps * scale * scale && c.norm > 0.0) return c.v;
  return rank_deficient_null_vector(m, avoid, fallback_index);
}

// Solves m x = b with partial pivoting; zero pivots are replaced by `tiny`.
Vector3c solve(Matrix3c m, Vector3c b, double tiny) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    if (std::abs(m[col][col]) < tiny) m[col][col] = tiny;
    for (int r = col + 1; r < 3; ++r) {
      const cplx f = m[r][col] / m[col][col];
      for (int k = col; k < 3; ++k) m[r][k] -= f * m[col][k];
      b[r] -= f * b[col];
    }
  }
  Vector3c x{};
  for (int r = 2; r >= 0; --r) {
    cplx s = b[r];
    for (int k = r + 1; k < 3; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  return x;
}

double residual_of(const Matrix3c& h, cplx lambda, const Vector3c& v) {
  const Vector3c hv = linalg::apply(h, v);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) s += std::norm(hv[i] - lambda * v[i]);
  return std::sqrt(s);
}

void check_finite(const Matrix3c& h) {
  for (const auto& row : h)
    for (const auto& x : row)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw InvalidParameter("eig3: matrix has non-finite entries");
}

// Inverse iteration on the shifted matrix, used when the cross-product vector
// misses the residual bound (near-defective input).
Vector3c refine(const Matrix3c& a, cplx lambda, Vector3c v, double scale) {
  const double tiny = std::max(scale, std::numeric_limits<double>::min()) * kEps;
  const Matrix3c m = shifted(a, lambda + cplx(tiny, 0.0));
  for (int it = 0; it < 3; ++it) v = normalized(solve(m, v, tiny));
  return v;
}

void finalize_pair(EigenPair& pair, const Matrix3c& h, const Matrix3c& a, cplx shifted_value, double bound,
                   double scale) {
  pair.vector = fix_phase(normalized(pair.vector));
  pair.residual = residual_of(h, pair.value, pair.vector);
  if (pair.residual <= bound) return;

  Vector3c alt = fix_phase(refine(a, shifted_value, pair.vector, scale));
  const double alt_residual = residual_of(h, pair.value, alt);
  if (alt_residual < pair.residual) {
    pair.vector = alt;
    pair.residual = alt_residual;
  }
  if (pair.residual > bound) {
    std::ostringstream os;
    os << "eig3: residual " << pair.residual << " exceeds bound " << bound << " for eigenvalue "
       << pair.value;
    throw NumericalFailure(os.str(), pair.residual);
  }
}

void set_overlap_diagnostics(EigenDecomposition& out) {
  out.max_overlap = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      out.max_overlap =
          std::max(out.max_overlap, std::abs(linalg::inner(out.pairs[i].vector, out.pairs[j].vector)));
  out.near_exceptional = out.max_overlap > kExceptionalOverlap;
}

cplx choose_shift(const Matrix3c& h) {
  if (h[0][0] == h[1][1] && h[1][1] == h[2][2]) return h[0][0];
  return linalg::trace(h) / 3.0;
}

EigenDecomposition hermitian_eig(const Matrix3c& h, double hnorm) {
  const double s = choose_shift(h).real();
  const Matrix3c a = shifted(h, s);
  const Cubic p = characteristic(a);
  auto roots = trigonometric_roots(p.a.real(), p.b.real(), p.c.real());
  const Cubic pr{p.a.real(), p.b.real(), p.c.real()};
  for (auto& r : roots) polish(pr, r);
  std::sort(roots.begin(), roots.end(), lex_less);

  // The most isolated eigenvalue has the best-conditioned cross-product vector.
  std::array<double, 3> isolation{};
  for (int i = 0; i < 3; ++i) {
    isolation[i] = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 3; ++j)
      if (j != i) isolation[i] = std::min(isolation[i], std::abs(roots[i] - roots[j]));
  }
  const int k = static_cast<int>(std::max_element(isolation.begin(), isolation.end()) - isolation.begin());
  const int i = (k + 1) % 3;

  const Vector3c va = normalized(eigenvector_for(a, roots[k], nullptr, k));
  Vector3c vb = eigenvector_for(a, roots[i], &va, i);
  const cplx proj = linalg::inner(va, vb);
  for (int c = 0; c < 3; ++c) vb[c] -= proj * va[c];
  vb = normalized(vb);
  const Vector3c vc = normalized(linalg::conj(linalg::cross(va, vb)));

  EigenDecomposition out;
  out.hermitian = true;
  out.frobenius_norm = hnorm;
  std::array<Vector3c, 3> vecs{va, vb, vc};
  for (int c = 0; c < 3; ++c) {
    const double rq = linalg::inner(vecs[c], linalg::apply(a, vecs[c])).real();
    out.pairs[c].value = cplx(rq + s, 0.0);
    out.pairs[c].vector = vecs[c];
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const EigenPair& x, const EigenPair& y) { return lex_less(x.value, y.value); });

  const double bound = kResidualTolerance * hnorm;
  for (auto& pair : out.pairs)
    finalize_pair(pair, h, a, pair.value - s, bound, linalg::frobenius_norm(a));
  set_overlap_diagnostics(out);
  return out;
}

EigenDecomposition general_eig(const Matrix3c& h, double hnorm) {
  const cplx s = choose_shift(h);
  const Matrix3c a = shifted(h, s);
  const Cubic p = characteristic(a);
  auto roots = cardano_roots(p);
  for (auto& r : roots) polish(p, r);
  std::sort(roots.begin(), roots.end(), lex_less);

  const double ascale = linalg::frobenius_norm(a);
  const double cluster = 1e-8 * std::max(ascale, std::numeric_limits<double>::min());
  EigenDecomposition out;
  out.frobenius_norm = hnorm;
  for (int i = 0; i < 3; ++i) {
    const Vector3c* avoid = nullptr;
    for (int j = 0; j < i; ++j)
      if (std::abs(roots[i] - roots[j]) <= cluster) avoid = &out.pairs[j].vector;
    out.pairs[i].value = roots[i] + s;
    out.pairs[i].vector = normalized(eigenvector_for(a, roots[i], avoid, i));
  }
  const double bound = kResidualTolerance * hnorm;
  for (int i = 0; i < 3; ++i) finalize_pair(out.pairs[i], h, a, roots[i], bound, ascale);
  set_overlap_diagnostics(out);
  return out;
}

}  // namespace

EigenDecomposition eig3(const Matrix3c& h) {
  check_finite(h);
  const double hnorm = linalg::frobenius_norm(h);
  if (hnorm == 0.0) {
    EigenDecomposition out;
    out.hermitian = true;
    for (int i = 0; i < 3; ++i) {
      out.pairs[i].value = 0.0;
      out.pairs[i].vector[i] = 1.0;
    }
    return out;
  }
  return linalg::is_exactly_hermitian(h) ? hermitian_eig(h, hnorm) : general_eig(h, hnorm);
}

EigenDecomposition eig3(const RungMatrix& h) { return eig3(h.entries); }

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::LP: return "LP";
    case Branch::MP: return "MP";
    case Branch::UP: return "UP";
  }
  return "?";
}

BranchSet energy_ordered(const EigenDecomposition& eig) {
  BranchSet set;
  set.branches = eig.pairs;
  return set;
}

BranchSet track_branches(const BranchSet& prev, const std::array<EigenPair, 3>& current) {
  std::array<std::array<double, 3>, 3> overlap{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      overlap[i][j] = std::abs(linalg::inner(prev.branches[i].vector, current[j].vector));

  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> best = perm;
  double best_total = -1.0;
  do {
    const double total = overlap[0][perm[0]] + overlap[1][perm[1]] + overlap[2][perm[2]];
    if (total > best_total) {
      best_total = total;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  BranchSet out;
  out.total_overlap = best_total;
  out.min_overlap = std::min({overlap[0][best[0]], overlap[1][best[1]], overlap[2][best[2]]});
  for (int i = 0; i < 3; ++i) out.branches[i] = current[best[i]];
  return out;
}

}  // namespace dipolariton
