#include "quadbez/bezoutian.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "quadbez/errors.hpp"

namespace quadbez {

Inertia matrix_inertia(Matrix<GaussianRational> h) {
  const std::size_t n = h.rows();
  Inertia in;
  std::size_t k = 0;

  auto swap_symmetric = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(h(x, c), h(y, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(h(r, x), h(r, y));
  };

  while (k < n) {
    // Prefer a nonzero diagonal pivot.
    std::size_t piv = n;
    for (std::size_t j = k; j < n; ++j)
      if (!h(j, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv < n) {
      swap_symmetric(k, piv);
      GaussianRational d = h(k, k);
      if (!d.is_real())
        throw NumericalFailure("inertia: non-real diagonal pivot");
      if (d.real_sign() > 0)
        ++in.n_plus;
      else
        ++in.n_minus;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (h(r, k).is_zero()) continue;
        GaussianRational factor = h(r, k) / d;
        for (std::size_t c = k + 1; c < n; ++c)
          h(r, c) -= factor * h(k, c);
        h(r, k) = GaussianRational();
      }
      for (std::size_t c = k + 1; c < n; ++c) h(k, c) = GaussianRational();
      ++k;
      continue;
    }

    // Zero diagonal everywhere: look for an off-diagonal entry to form a
    // 2x2 anti-diagonal pivot, which carries inertia (+1, -1).
    std::size_t pr = n, pc = n;
    for (std::size_t r = k; r < n && pr == n; ++r)
      for (std::size_t c = r + 1; c < n; ++c)
        if (!h(r, c).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == n) {
      in.n_zero += static_cast<int>(n - k);
      break;
    }
    swap_symmetric(k, pr);
    swap_symmetric(k + 1, pc);
    GaussianRational e = h(k, k + 1);
    GaussianRational ec = h(k + 1, k);
    ++in.n_plus;
    ++in.n_minus;
    // Schur complement against the block [[0,e],[ec,0]]:
    //   A_rc -= h(r,k+1) h(k,c) / e + h(r,k) h(k+1,c) / ec.
    for (std::size_t r = k + 2; r < n; ++r) {
      GaussianRational f1 = h(r, k + 1) / e;
      GaussianRational f2 = h(r, k) / ec;
      if (f1.is_zero() && f2.is_zero()) continue;
      for (std::size_t c = k + 2; c < n; ++c)
        h(r, c) -= f1 * h(k, c) + f2 * h(k + 1, c);
      h(r, k) = GaussianRational();
      h(r, k + 1) = GaussianRational();
    }
    for (std::size_t c = k + 2; c < n; ++c) {
      h(k, c) = GaussianRational();
      h(k + 1, c) = GaussianRational();
    }
    k += 2;
  }
  return in;
}

std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& h) {
  const std::size_t n = h.rows();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = h(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("inertia: eigensolver did not converge");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = solver.eigenvalues()(static_cast<int>(k));
  return out;
}

InertiaResult matrix_inertia(const Matrix<Complex>& h, double rank_tol,
                             bool strict) {
  const std::size_t n = h.rows();

  // The pole basis carries wildly different natural scales (derivative
  // order k shows up as |a|^-k factors), so the raw form can spread its
  // spectrum over ten decades and drown true eigenvalues under a
  // norm-relative cut. A positive diagonal congruence S H S leaves the
  // inertia untouched (Sylvester) and compresses the spread; powers of two
  // keep the scaling exact. Down-scaling also shrinks absolute rounding
  // noise, but up-scaling amplifies it, so the cumulative upward exponent
  // is capped: a row consisting of pure cancellation noise must stay tiny
  // rather than be normalized into a fake O(1) eigenvalue.
  Matrix<Complex> hb = h;
  std::vector<int> net(n, 0);
  constexpr int kMaxUpExponent = 8;
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0;
      for (std::size_t j = 0; j < n; ++j) r = std::max(r, std::abs(hb(i, j)));
      if (r <= 0.0) continue;
      int e = static_cast<int>(std::lround(-std::log2(r) / 2.0));
      if (e > 0) e = std::min(e, kMaxUpExponent - net[i]);
      if (e == 0) continue;
      double s = std::ldexp(1.0, e);
      changed = true;
      net[i] += e;
      for (std::size_t j = 0; j < n; ++j) {
        hb(i, j) *= s;
        hb(j, i) *= s;
      }
    }
    if (!changed) break;
  }

  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = hb(i, j);

  // These forms are graded: true eigenvalues can sit many decades below the
  // norm while still being honestly nonzero (exact-mode inertia confirms),
  // so a flat cut misclassifies them. Eigenvalues inside the cut's guard
  // band are refined recursively: project onto their eigenspace and
  // classify the small block at its own scale. True zeros bottom out at
  // the noise floor, where double precision genuinely cannot distinguish a
  // value from zero; a block stranded just above the floor is ambiguous.
  const double band = std::sqrt(10.0);  // one decade total width
  const double floor_abs = 64.0 * static_cast<double>(n) *
                           std::numeric_limits<double>::epsilon() *
                           std::max(1.0, hb.frobenius_norm());

  InertiaResult res;
  std::function<void(const Eigen::MatrixXcd&, int)> classify =
      [&](const Eigen::MatrixXcd& block, int level) {
        const int k = static_cast<int>(block.rows());
        if (k == 0) return;
        const double fro = block.norm();
        if (fro <= floor_abs) {
          res.inertia.n_zero += k;
          return;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
        if (solver.info() != Eigen::Success)
          throw NumericalFailure("inertia: eigensolver did not converge");
        const double cut =
            level == 0 ? rank_tol * std::max(1.0, fro) : rank_tol * fro;
        std::vector<int> suspicious;
        for (int j = 0; j < k; ++j) {
          double ev = solver.eigenvalues()(j);
          if (level == 0) res.eigenvalues.push_back(ev);
          if (std::abs(ev) < cut * band)
            suspicious.push_back(j);
          else if (ev > 0.0)
            ++res.inertia.n_plus;
          else
            ++res.inertia.n_minus;
        }
        if (suspicious.empty()) return;
        Eigen::MatrixXcd v(k, suspicious.size());
        for (std::size_t c = 0; c < suspicious.size(); ++c)
          v.col(static_cast<int>(c)) =
              solver.eigenvectors().col(suspicious[static_cast<std::size_t>(c)]);
        Eigen::MatrixXcd sub = v.adjoint() * block * v;
        const double sub_fro = sub.norm();
        if (sub_fro <= floor_abs) {
          res.inertia.n_zero += static_cast<int>(suspicious.size());
          return;
        }
        if (sub_fro <= 100.0 * floor_abs || level >= 8) {
          res.ambiguous = true;
          res.inertia.n_zero += static_cast<int>(suspicious.size());
          for (int j : suspicious) res.offending.push_back(solver.eigenvalues()(j));
          return;
        }
        classify(sub, level + 1);
      };
  classify(m, 0);

  if (res.ambiguous && strict) {
    std::ostringstream msg;
    msg << "inertia: ambiguous rank near the noise floor " << floor_abs
        << ", eigenvalues:";
    for (double ev : res.offending) msg << " " << ev;
    throw NumericalFailure(msg.str());
  }
  return res;
}

}  // namespace quadbez
