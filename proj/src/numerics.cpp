#include "gmlab/numerics.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/MatrixFunctions>
#include <unsupported/Eigen/NumericalDiff>

namespace gmlab::numerics {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_rng(std::uint64_t seed, std::string_view key) {
  const std::uint64_t s = splitmix64(seed ^ splitmix64(fnv1a(key)));
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Eigen::VectorXd gaussian(Rng& rng, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

Eigen::VectorXd unit_vector(Rng& rng, int n) {
  Eigen::VectorXd v = gaussian(rng, n);
  return v / v.norm();
}

algebra::Quaternion unit_quaternion(Rng& rng) { return algebra::Quaternion::fromVector(unit_vector(rng, 4)); }

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) { return a.exp(); }

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

namespace {

struct GslObjective {
  const std::function<double(const Eigen::VectorXd&)>* f;
  int n;
};

double gsl_trampoline(const gsl_vector* v, void* params) {
  auto* obj = static_cast<GslObjective*>(params);
  Eigen::VectorXd x(obj->n);
  for (int i = 0; i < obj->n; ++i) x[i] = gsl_vector_get(v, i);
  return (*obj->f)(x);
}

struct LmFunctor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  using QRSolver = Eigen::ColPivHouseholderQR<JacobianType>;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>* r;
  int n_in, n_out;

  int inputs() const { return n_in; }
  int values() const { return n_out; }
  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    fvec = (*r)(x);
    return 0;
  }
};

}  // namespace

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                           double step, double size_tol, int max_iter) {
  const int n = static_cast<int>(x0.size());
  GslObjective obj{&f, n};
  gsl_multimin_function fn{&gsl_trampoline, static_cast<size_t>(n), &obj};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* ss = gsl_vector_alloc(n);
  for (int i = 0; i < n; ++i) gsl_vector_set(x, i, x0[i]);
  gsl_vector_set_all(ss, step);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, ss);

  MinimizeResult out;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && out.iterations < max_iter) {
    ++out.iterations;
    if (gsl_multimin_fminimizer_iterate(s)) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), size_tol);
  }
  out.converged = status == GSL_SUCCESS;
  out.x.resize(n);
  for (int i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  out.value = s->fval;
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(x);
  gsl_vector_free(ss);
  return out;
}

MinimizeResult least_squares(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
                             const Eigen::VectorXd& x0, int residual_count, int max_evals) {
  LmFunctor base{&residual, static_cast<int>(x0.size()), residual_count};
  Eigen::NumericalDiff<LmFunctor> diff(base);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<LmFunctor>> lm(diff);
  lm.setMaxfev(max_evals);
  lm.setXtol(1e-14);
  lm.setFtol(1e-14);
  Eigen::VectorXd x = x0;
  auto info = lm.minimize(x);
  MinimizeResult out;
  out.x = x;
  out.value = residual(x).norm();
  out.iterations = static_cast<int>(lm.iterations());
  out.converged = info == Eigen::LevenbergMarquardtSpace::RelativeReductionTooSmall ||
                  info == Eigen::LevenbergMarquardtSpace::RelativeErrorTooSmall ||
                  info == Eigen::LevenbergMarquardtSpace::RelativeErrorAndReductionTooSmall;
  return out;
}

}  // namespace gmlab::numerics
