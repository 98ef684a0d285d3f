#pragma once

#include <Eigen/Dense>
#include <vector>

namespace usc {

/// Highest polynomial degree / Fock index accepted by the recurrence-based
/// special functions. The three-term recurrence is stable well past this;
/// the ceiling mostly guards against runaway loop sizes.
inline constexpr int kLaguerreDegreeCeiling = 512;

/// Associated Laguerre polynomial L_n^k(x) by upward recurrence in the
/// degree. Requires n, k >= 0 and finite x >= 0; n capped at
/// kLaguerreDegreeCeiling.
double laguerre_assoc(int n, int k, double x);

/// ln(n!) for n up to 10^6. Factorial ratios such as sqrt(n!/m!) must be
/// assembled from differences of this in log space.
double log_factorial(long long n);

/// Dense real symmetric matrix. Writes store both (i,j) and (j,i), so the
/// stored matrix is symmetric exactly, not merely up to roundoff.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value);
  double trace() const { return m_.trace(); }
  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

struct EigDecomposition {
  std::vector<double> values;  // ascending
  Eigen::MatrixXd vectors;     // orthonormal columns; col(k) pairs with values[k]
};

/// Full eigendecomposition of a symmetric matrix. Values ascend. Each
/// eigenvector is sign-fixed (first component above 1e-12 of its largest
/// entry made positive) so identical inputs give identical output, including
/// inside degenerate eigenvalue clusters.
EigDecomposition sym_eigh(const SymmetricMatrix& a);

}  // namespace usc
