#include "triuncert/entropy.hpp"

#include <cmath>
#include <string>

#include "triuncert/error.hpp"
#include "triuncert/linalg.hpp"

namespace triuncert {

namespace {

double xlog2x(double x) { return x > kEntropyCutoff ? -x * std::log2(x) : 0.0; }

void check_subset(const DensityMatrix& rho, const SubsystemSet& subset, const char* what) {
  if (subset.empty() || subset.size() >= rho.num_subsystems()) {
    throw DomainError(std::string(what) + ": subsystem set must be a proper non-empty subset");
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= rho.num_subsystems() || (i > 0 && subset[i] <= subset[i - 1])) {
      throw DomainError(std::string(what) + ": subsystem indices must be in range and strictly increasing");
    }
  }
}

SubsystemSet complement(std::size_t count, const SubsystemSet& subset) {
  SubsystemSet out;
  std::size_t j = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (j < subset.size() && subset[j] == s) {
      ++j;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace

double spectral_entropy(std::span<const double> spectrum) {
  double s = 0.0;
  for (double x : spectrum) s += xlog2x(x);
  return s;
}

double von_neumann(const DensityMatrix& rho) {
  const std::vector<double> spectrum = eigvals_hermitian(rho.matrix());
  return spectral_entropy(spectrum);
}

double conditional_entropy(const DensityMatrix& rho, const SubsystemSet& conditioning) {
  check_subset(rho, conditioning, "conditional_entropy");
  return von_neumann(rho) - von_neumann(partial_trace(rho, conditioning));
}

double mutual_information(const DensityMatrix& rho, const SubsystemSet& first) {
  check_subset(rho, first, "mutual_information");
  const SubsystemSet second = complement(rho.num_subsystems(), first);
  return von_neumann(partial_trace(rho, first)) + von_neumann(partial_trace(rho, second)) - von_neumann(rho);
}

double shannon(std::span<const double> dist) {
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= -1e-12)) throw DomainError("shannon: negative probability");
    total += p;
  }
  if (!(std::abs(total - 1.0) <= 1e-10)) throw DomainError("shannon: probabilities do not sum to 1");
  double h = 0.0;
  for (double p : dist) h += xlog2x(p);
  return h;
}

double binary_entropy(double y) {
  if (!(y >= -1e-12 && y <= 1.0 + 1e-12)) throw DomainError("binary_entropy: argument outside [0, 1]");
  if (y <= 0.0 || y >= 1.0) return 0.0;
  return -y * std::log2(y) - (1.0 - y) * std::log2(1.0 - y);
}

double holevo(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t subsystem) {
  const MeasurementEnsemble ens = measurement_ensemble(rho, basis, subsystem);
  const SubsystemSet rest = complement(rho.num_subsystems(), {subsystem});
  double chi = von_neumann(partial_trace(rho, rest));
  for (std::size_t i = 0; i < ens.probs.size(); ++i) {
    if (ens.probs[i] > kNegligibleProbability) chi -= ens.probs[i] * von_neumann(ens.cond_states[i]);
  }
  return chi;
}

double classical_conditional_entropy(const DensityMatrix& rho_ab, const MeasurementBasis& basis_a,
                                     const MeasurementBasis& basis_b) {
  if (rho_ab.num_subsystems() != 2) {
    throw DomainError("classical_conditional_entropy expects a two-subsystem state");
  }
  if (rho_ab.dims()[0] != basis_a.dim() || rho_ab.dims()[1] != basis_b.dim()) {
    throw DomainError("classical_conditional_entropy: basis dimensions do not match the subsystems");
  }
  const std::size_t da = basis_a.dim(), db = basis_b.dim();
  std::vector<double> joint;
  std::vector<double> marginal_b(db, 0.0);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      // p(i,j) = <a_i b_j| rho |a_i b_j>
      const std::vector<cplx>& a = basis_a.vectors()[i];
      const std::vector<cplx>& b = basis_b.vectors()[j];
      std::vector<cplx> v(da * db);
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < db; ++y) v[x * db + y] = a[x] * b[y];
      cplx p = 0.0;
      const ComplexMatrix& m = rho_ab.matrix();
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) p += std::conj(v[r]) * m(r, c) * v[c];
      joint.push_back(p.real());
      marginal_b[j] += p.real();
    }
  }
  return shannon(joint) - shannon(marginal_b);
}

}  // namespace triuncert
