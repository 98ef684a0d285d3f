#pragma once

namespace usc {

// Canonical internal units: hbar = mass = omega0 = 1, so every energy below
// is already in units of hbar*omega0. mass/omega0 stay explicit in the
// formulas so they read dimensionally.
inline constexpr double kHbar = 1.0;

/// Joint state of the two identical qubits. The enumerator order (EE, EG,
/// GE, GG) is the fixed basis order of every 4x4 matrix in this library.
enum class QubitJointState { EE = 0, EG = 1, GE = 2, GG = 3 };

/// The three effective oscillator wells selected by the joint qubit state:
/// GG sits in the Minus well, EG/GE in the undisplaced Zero well, EE in Plus.
enum class WellLabel { Minus = 0, Zero = 1, Plus = 2 };

/// Immutable physical parameter set with the derived quantities cached.
/// Construct through make_params / params_from_g; all operations taking a
/// ModelParams are pure and safe for concurrent use.
class ModelParams {
 public:
  double delta() const { return delta_; }      // qubit gap, >= 0
  double epsilon() const { return epsilon_; }  // qubit bias, any sign
  double omega0() const { return omega0_; }    // oscillator frequency
  double mass() const { return mass_; }        // oscillator mass
  double lambda() const { return lambda_; }    // Fock-basis coupling, >= 0

  /// Qubit level splitting sqrt(delta^2 + epsilon^2); always > 0.
  double eq() const { return eq_; }
  /// Mixing angle atan2(epsilon, delta); quadrant-correct as delta -> 0.
  double theta() const { return theta_; }
  /// Position-basis coupling g = lambda * sqrt(2*m*omega0/hbar).
  double g() const { return g_; }
  /// Coupling in units of hbar*omega0.
  double lambda_over_omega0() const { return lambda_ / (kHbar * omega0_); }

 private:
  ModelParams(double delta, double epsilon, double lambda);
  friend ModelParams make_params(double, double, double);
  friend ModelParams params_from_g(double, double, double);

  double delta_;
  double epsilon_;
  double omega0_;
  double mass_;
  double lambda_;
  double eq_;
  double theta_;
  double g_;
};

/// Canonical-unit factory. lambda_over_omega0 is the coupling in units of
/// hbar*omega0. Rejects delta < 0, lambda < 0 and a fully degenerate qubit
/// (delta = epsilon = 0, which would put E_q = 0 into denominators).
ModelParams make_params(double delta, double epsilon, double lambda_over_omega0);

/// Same, but from the position-basis coupling g (inverts the lambda-g
/// relation at machine precision).
ModelParams params_from_g(double delta, double epsilon, double g);

/// Eigenvalue of sigma_z1 + sigma_z2 on a joint state: +2, 0, 0, -2.
double sigma_z_sum(QubitJointState q);

/// The well hosting a joint qubit state.
WellLabel well_of(QubitJointState q);

/// Well displacement in dimensionless ladder units: Minus well at
/// +2*lambda/(hbar*omega0), Plus well at the opposite sign, Zero at 0.
double well_displacement(WellLabel w, const ModelParams& p);

}  // namespace usc
