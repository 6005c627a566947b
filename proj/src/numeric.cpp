#include "ssc/numeric.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ssc {

namespace {

// [0, 1) from the top 53 bits; avoids std::uniform_real_distribution, whose
// output is implementation-defined.
double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Matrix sample_matrix(const Pattern& p, std::mt19937_64& rng) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(p.rows()),
                          static_cast<Eigen::Index>(p.cols()));
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p.at(i, j)) {
        const double magnitude = 0.5 + 1.5 * unit_from_bits(rng());
        const bool negative = (rng() & 1U) != 0;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            negative ? -magnitude : magnitude;
      }
  return m;
}

// Steps s = t0 .. t1-1 must all lie in the stored window.
void check_steps(const Instantiation& inst, long t0, long t1,
                 const char* what) {
  if (t0 >= t1)
    throw std::invalid_argument(std::string(what) + ": empty interval [" +
                                std::to_string(t0) + "," +
                                std::to_string(t1) + ")");
  if (t0 < inst.t0 || t1 > inst.t1)
    throw std::out_of_range(std::string(what) + ": interval [" +
                            std::to_string(t0) + "," + std::to_string(t1) +
                            ") not inside window [" + std::to_string(inst.t0) +
                            "," + std::to_string(inst.t1) + ")");
}

}  // namespace

std::size_t Instantiation::step_index(long t) const {
  if (t < t0 || t >= t1)
    throw std::out_of_range("Instantiation: time " + std::to_string(t) +
                            " outside window [" + std::to_string(t0) + "," +
                            std::to_string(t1) + ")");
  return static_cast<std::size_t>(t - t0);
}

bool matches_pattern(const Matrix& m, const Pattern& p) {
  if (m.rows() != static_cast<Eigen::Index>(p.rows()) ||
      m.cols() != static_cast<Eigen::Index>(p.cols()))
    return false;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      const double value =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (p.at(i, j) ? value == 0.0 : value != 0.0) return false;
    }
  return true;
}

Instantiation sample_instantiation(const Pattern& a, const Pattern& b, long t0,
                                   long t1, SampleKind kind,
                                   std::uint64_t seed) {
  if (!a.square())
    throw std::invalid_argument("sample_instantiation: state pattern must be "
                                "square");
  if (b.rows() != a.rows())
    throw std::invalid_argument("sample_instantiation: row mismatch");
  if (t1 <= t0)
    throw std::invalid_argument("sample_instantiation: empty window");

  Instantiation inst;
  inst.n = static_cast<int>(a.rows());
  inst.r = static_cast<int>(b.cols());
  inst.t0 = t0;
  inst.t1 = t1;
  std::mt19937_64 rng(seed);
  const std::size_t steps = static_cast<std::size_t>(t1 - t0);
  if (kind == SampleKind::constant) {
    const Matrix am = sample_matrix(a, rng);
    const Matrix bm = sample_matrix(b, rng);
    inst.a.assign(steps, am);
    inst.b.assign(steps, bm);
  } else {
    for (std::size_t s = 0; s < steps; ++s) {
      inst.a.push_back(sample_matrix(a, rng));
      inst.b.push_back(sample_matrix(b, rng));
    }
  }
  return inst;
}

Instantiation sample_output_instantiation(const Pattern& a, const Pattern& c,
                                          long t0, long t1, SampleKind kind,
                                          std::uint64_t seed) {
  if (c.cols() != a.rows())
    throw std::invalid_argument(
        "sample_output_instantiation: output pattern must have n columns");
  Instantiation inst =
      sample_instantiation(a, Pattern::zero(a.rows(), 0), t0, t1, kind, seed);
  inst.m = static_cast<int>(c.rows());
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t steps = static_cast<std::size_t>(t1 - t0);
  if (kind == SampleKind::constant) {
    inst.c.assign(steps, sample_matrix(c, rng));
  } else {
    for (std::size_t s = 0; s < steps; ++s)
      inst.c.push_back(sample_matrix(c, rng));
  }
  return inst;
}

Matrix transition_matrix_dt(const Instantiation& inst, long t, long t0) {
  if (t0 > t)
    throw std::out_of_range("transition_matrix_dt: need t0 <= t");
  if (t0 < inst.t0 || t > inst.t1)
    throw std::out_of_range("transition_matrix_dt: [" + std::to_string(t0) +
                            "," + std::to_string(t) + "] outside window");
  Matrix phi = Matrix::Identity(inst.n, inst.n);
  for (long s = t0; s < t; ++s) phi = inst.a_at(s) * phi;
  return phi;
}

Matrix reachability_matrix_dt(const Instantiation& inst, long t0, long t1) {
  check_steps(inst, t0, t1, "reachability_matrix_dt");
  const long steps = t1 - t0;
  Matrix m(inst.n, static_cast<Eigen::Index>(steps) * inst.r);
  for (long s = t0; s < t1; ++s) {
    // Phi(t1, s+1) = A(t1-1) ... A(s+1)
    Matrix phi = Matrix::Identity(inst.n, inst.n);
    for (long u = s + 1; u < t1; ++u) phi = inst.a_at(u) * phi;
    m.block(0, static_cast<Eigen::Index>(s - t0) * inst.r, inst.n, inst.r) =
        phi * inst.b_at(s);
  }
  return m;
}

Matrix observability_matrix_dt(const Instantiation& inst, long t0, long t1) {
  check_steps(inst, t0, t1, "observability_matrix_dt");
  if (inst.c.empty())
    throw std::invalid_argument(
        "observability_matrix_dt: instantiation has no output matrices");
  const long steps = t1 - t0;
  Matrix m(static_cast<Eigen::Index>(steps) * inst.m, inst.n);
  Matrix phi = Matrix::Identity(inst.n, inst.n);  // Phi(s, t0), s = t0
  for (long s = t0; s < t1; ++s) {
    m.block(static_cast<Eigen::Index>(s - t0) * inst.m, 0, inst.m, inst.n) =
        inst.c_at(s) * phi;
    if (s + 1 < t1) phi = inst.a_at(s) * phi;
  }
  return m;
}

Matrix k_matrix_dt(const Instantiation& inst, long t0, long t1) {
  check_steps(inst, t0, t1, "k_matrix_dt");
  const long horizon = t1 - t0;
  const Eigen::Index n = inst.n;
  const Eigen::Index r = inst.r;
  const Eigen::Index big_t = static_cast<Eigen::Index>(horizon);
  Matrix k = Matrix::Zero(n * big_t, (n + r) * big_t);
  for (Eigen::Index i = 1; i <= big_t; ++i) {
    const Eigen::Index row0 = (i - 1) * n;
    if (i >= 2) k.block(row0, (i - 1) * n, n, n) = inst.a_at(t0 + i - 1);
    if (i <= big_t - 1)
      k.block(row0, i * n, n, n) = Matrix::Identity(n, n);
    k.block(row0, big_t * n + (i - 1) * r, n, r) = inst.b_at(t0 + i - 1);
  }
  return k;
}

Instantiation time_reversed_adjoint(const Instantiation& inst) {
  if (inst.c.empty())
    throw std::invalid_argument(
        "time_reversed_adjoint: instantiation has no output matrices");
  Instantiation adj;
  adj.n = inst.n;
  adj.r = inst.m;
  adj.t0 = inst.t0;
  adj.t1 = inst.t1;
  for (long t = inst.t0; t < inst.t1; ++t) {
    const long mirrored = inst.t0 + inst.t1 - 1 - t;
    adj.a.push_back(inst.a_at(mirrored).transpose());
    adj.b.push_back(inst.c_at(mirrored).transpose());
  }
  return adj;
}

int numeric_rank(const Matrix& m, double rel_tol) {
  if (rel_tol <= 0)
    throw std::invalid_argument("numeric_rank: rel_tol must be positive");
  if (m.size() == 0) return 0;
  Matrix work = m;
  const double scale = work.cwiseAbs().maxCoeff();
  const double threshold = rel_tol * scale;
  int rank = 0;
  for (Eigen::Index col = 0; col < work.cols() && rank < work.rows(); ++col) {
    Eigen::Index pivot_row = rank;
    double best = std::abs(work(rank, col));
    for (Eigen::Index i = rank + 1; i < work.rows(); ++i)
      if (std::abs(work(i, col)) > best) {
        best = std::abs(work(i, col));
        pivot_row = i;
      }
    if (best <= threshold) continue;
    work.row(pivot_row).swap(work.row(rank));
    for (Eigen::Index i = rank + 1; i < work.rows(); ++i) {
      const double factor = work(i, col) / work(rank, col);
      work.row(i) -= factor * work.row(rank);
    }
    ++rank;
  }
  return rank;
}

Matrix matrix_exponential(const Matrix& a, double scale) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("matrix_exponential: matrix must be square");
  Matrix m = a * scale;
  // Halve until the norm is at most 1, then square back.
  int squarings = 0;
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 1.0) {
    m /= 2.0;
    norm /= 2.0;
    ++squarings;
  }
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  for (int k = 1; k <= 40; ++k) {
    term = (term * m) / static_cast<double>(k);
    const double term_max = term.cwiseAbs().maxCoeff();
    if (term_max == 0.0) break;  // series terminated (nilpotent input)
    result += term;
    if (term_max < 1e-17 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

namespace {

struct FamilyMatrices {
  Matrix a;
  std::function<Eigen::VectorXd(double)> b;
};

FamilyMatrices family_matrices(CtFamily family) {
  switch (family) {
    case CtFamily::exp_input: {
      Matrix a(2, 2);
      a << 1, 0, 0, 0;
      return {a, [](double t) {
                Eigen::VectorXd b(2);
                b << std::exp(t), 1.0;
                return b;
              }};
    }
    case CtFamily::poly_input: {
      Matrix a(3, 3);
      a << 0, 1, 0, 0, 0, 1, 0, 0, 0;
      return {a, [](double t) {
                Eigen::VectorXd b(3);
                b << t * t + 1.0, 0.0, -2.0;
                return b;
              }};
    }
  }
  throw std::invalid_argument("unknown continuous family");
}

}  // namespace

double annihilator_residual_ct(const RowVector& p, CtFamily family, double t0,
                               double t1, int samples) {
  if (samples < 2)
    throw std::invalid_argument("annihilator_residual_ct: need >= 2 samples");
  if (!(t0 < t1))
    throw std::invalid_argument("annihilator_residual_ct: need t0 < t1");
  const FamilyMatrices fam = family_matrices(family);
  if (p.cols() != fam.a.rows())
    throw std::invalid_argument("annihilator_residual_ct: p has " +
                                std::to_string(p.cols()) +
                                " entries, family state dimension is " +
                                std::to_string(fam.a.rows()));
  double residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double tau = t0 + (t1 - t0) * static_cast<double>(i) /
                                static_cast<double>(samples - 1);
    const Matrix phi = matrix_exponential(fam.a, t1 - tau);
    const double value = (p * phi * fam.b(tau))(0);
    residual = std::max(residual, std::abs(value));
  }
  return residual;
}

std::pair<Matrix, Matrix> exp_scaled_coefficients(const Matrix& lambda_diag,
                                                  const Matrix& a0,
                                                  const Matrix& b0, double t) {
  const Eigen::Index n = lambda_diag.rows();
  if (lambda_diag.cols() != n)
    throw std::invalid_argument("exp_scaled_coefficients: Lambda must be "
                                "square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && lambda_diag(i, j) != 0.0)
        throw std::invalid_argument(
            "exp_scaled_coefficients: Lambda must be diagonal");
  if (a0.rows() != n || a0.cols() != n)
    throw std::invalid_argument("exp_scaled_coefficients: A0 must be n x n");
  if (b0.rows() != n)
    throw std::invalid_argument("exp_scaled_coefficients: B0 row mismatch");

  // Row i scaled by e^{-lambda_i t}, column j by e^{+lambda_j t}.
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = std::exp(-lambda_diag(i, i) * t) * a0(i, j) *
                std::exp(lambda_diag(j, j) * t);
  a -= lambda_diag;
  Matrix b(n, b0.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    b.row(i) = std::exp(-lambda_diag(i, i) * t) * b0.row(i);
  return {a, b};
}

std::string format_matrix(const Matrix& m, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ssc
