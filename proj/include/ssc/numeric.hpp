#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ssc/pattern.hpp"

namespace ssc {

using Matrix = Eigen::MatrixXd;
using RowVector = Eigen::RowVectorXd;

/// True iff m has an exact zero at every masked-zero cell and a nonzero at
/// every masked-nonzero cell.
bool matches_pattern(const Matrix& m, const Pattern& p);

/// Concrete coefficient matrices of a pattern over the discrete window
/// [t0, t1): A(t) and B(t) for each step, plus optional output matrices
/// C(t).
struct Instantiation {
  int n = 0;
  int r = 0;
  int m = 0;  // 0 when no output matrices are stored
  long t0 = 0;
  long t1 = 0;  // window [t0, t1)
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  std::vector<Matrix> c;

  const Matrix& a_at(long t) const { return a.at(step_index(t)); }
  const Matrix& b_at(long t) const { return b.at(step_index(t)); }
  const Matrix& c_at(long t) const { return c.at(step_index(t)); }

private:
  std::size_t step_index(long t) const;
};

enum class SampleKind { constant, per_step };

/// Draw an instantiation of (a, b): every nonzero cell gets a magnitude in
/// [0.5, 2] with random sign, every zero cell is exactly 0. `constant`
/// reuses one draw for the whole window. The draw depends only on the seed,
/// not on platform or library details.
Instantiation sample_instantiation(const Pattern& a, const Pattern& b, long t0,
                                   long t1, SampleKind kind,
                                   std::uint64_t seed);

/// As above for an output pair (a, c); the result has r = 0.
Instantiation sample_output_instantiation(const Pattern& a, const Pattern& c,
                                          long t0, long t1, SampleKind kind,
                                          std::uint64_t seed);

/// State propagator A(t-1) * ... * A(t0); identity when t = t0.
Matrix transition_matrix_dt(const Instantiation& inst, long t, long t0);

/// Columns Phi(t1, s+1) B(s) for s = t0 .. t1-1 (n rows, r*(t1-t0)
/// columns). Full row rank n is equivalent to controllability of the
/// instantiated system on [t0, t1].
Matrix reachability_matrix_dt(const Instantiation& inst, long t0, long t1);

/// Rows C(s) Phi(s, t0) for s = t0 .. t1-1; rank n is equivalent to
/// observability on [t0, t1].
Matrix observability_matrix_dt(const Instantiation& inst, long t0, long t1);

/// The horizon pattern's blocks filled with the instantiated matrices:
/// block row i carries A(t0+i-1), the identity, and B(t0+i-1). Surjective
/// exactly when the reachability matrix over [t0, t1] has rank n.
Matrix k_matrix_dt(const Instantiation& inst, long t0, long t1);

/// Time-reversed adjoint of an output instantiation: A~(t) = A(t0+t1-1-t)*,
/// B~(t) = C(t0+t1-1-t)* on the same window. Its reachability matrix
/// consists of the transposed observability rows in reversed block order,
/// so the two ranks coincide on matched windows.
Instantiation time_reversed_adjoint(const Instantiation& inst);

/// Rank by row reduction with partial pivoting; a pivot counts if its
/// magnitude exceeds rel_tol times the largest entry magnitude of the input.
int numeric_rank(const Matrix& m, double rel_tol = 1e-9);

/// exp(a * scale) by scaling-and-squaring with a truncated series. For
/// nilpotent inputs with small norm the series terminates and the result is
/// exact.
Matrix matrix_exponential(const Matrix& a, double scale);

/// Closed-form continuous-time families with constant A:
///   exp_input   n = 2, A = diag(1, 0),        B(t) = (e^t, 1)^T
///   poly_input  n = 3, A = upper shift,       B(t) = (t^2 + 1, 0, -2)^T
enum class CtFamily { exp_input, poly_input };

/// max over a uniform `samples`-point grid of tau in [t0, t1] of
/// |p Phi(t1, tau) B(tau)|, with Phi(t1, tau) = exp(A (t1 - tau)). A row
/// vector p annihilating every column witnesses uncontrollability on
/// [t0, t1].
double annihilator_residual_ct(const RowVector& p, CtFamily family, double t0,
                               double t1, int samples);

/// Exponentially scaled coefficients A(t) = e^{-Lambda t} A0 e^{Lambda t} -
/// Lambda, B(t) = e^{-Lambda t} B0, with diagonal Lambda.
std::pair<Matrix, Matrix> exp_scaled_coefficients(const Matrix& lambda_diag,
                                                  const Matrix& a0,
                                                  const Matrix& b0, double t);

/// Fixed-decimal rendering, one matrix row per line.
std::string format_matrix(const Matrix& m, int precision = 6);

}  // namespace ssc
