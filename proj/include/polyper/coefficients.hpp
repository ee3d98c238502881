#ifndef POLYPER_COEFFICIENTS_HPP
#define POLYPER_COEFFICIENTS_HPP

#include <complex>
#include <optional>
#include <vector>

namespace polyper {

using Complex = std::complex<double>;

struct Harmonic {
    int k = 1;       // positive frequency index (base frequency 2*pi/omega)
    double a = 0.0;  // cos amplitude
    double b = 0.0;  // sin amplitude
};

struct SupNorm {
    double certified_upper = 0.0;  // rigorous upper bound over [0, omega]
    double sampled_max = 0.0;      // dense-sampling lower estimate
};

/// A real function on [0, omega]: algebraic polynomial in t plus a
/// trigonometric polynomial at base frequency 2*pi/omega.
class CoeffFn {
  public:
    CoeffFn() = default;
    CoeffFn(std::vector<double> poly, std::vector<Harmonic> harmonics, double omega);

    static CoeffFn zero(double omega) { return CoeffFn({}, {}, omega); }
    static CoeffFn constant(double c, double omega) { return CoeffFn({c}, {}, omega); }

    double eval(double t) const;

    // d/dt as another CoeffFn over the same horizon.
    CoeffFn derivative() const;

    // Coefficient-sum bound: sum |c_j| max(1,omega)^j + sum(|a_k|+|b_k|).
    double coeff_sum_bound() const;

    // Certified upper bound plus a dense-sampled maximum of |f| on [0, omega]
    // (4096 uniform points, golden-section polish around the best sample).
    SupNorm sup_norm() const;

    CoeffFn scaled(double s) const;

    // Composition with t -> s*t, rescaling the horizon to omega/s (s > 0).
    // Exact within the class: harmonics keep their indices on the new horizon.
    CoeffFn time_scaled(double s) const;

    bool is_zero() const { return poly_.empty() && harmonics_.empty(); }
    const std::vector<double>& poly() const { return poly_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    double omega() const { return omega_; }

  private:
    std::vector<double> poly_;        // c0 + c1 t + c2 t^2 + ...
    std::vector<Harmonic> harmonics_; // distinct positive indices
    double omega_ = 1.0;
};

/// The equation dz/dt = [Pn(t)] z^n + P_{n-1}(t) z^{n-1} + ... + P_0(t) over
/// [0, omega]. The leading coefficient is absent for the monic form. Values
/// are immutable after construction; all operations are pure.
class Equation {
  public:
    enum class LeadingSign { None, Positive, Negative, Indefinite };

    // Certifies a present leading coefficient as sign-definite on [0, omega]
    // and throws VanishingLeading otherwise.
    Equation(int n, double omega, std::vector<CoeffFn> coeffs,
             std::optional<CoeffFn> leading = std::nullopt);

    // Construction path that records an uncertain leading sign instead of
    // throwing (used by the planar reduction, where definiteness is checked
    // downstream).
    static Equation unchecked(int n, double omega, std::vector<CoeffFn> coeffs,
                              std::optional<CoeffFn> leading);

    int n() const { return n_; }
    double omega() const { return omega_; }
    const std::vector<CoeffFn>& coeffs() const { return coeffs_; }
    const CoeffFn& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::optional<CoeffFn>& leading() const { return leading_; }
    LeadingSign leading_sign() const { return leading_sign_; }

    // max_i certified sup norm of P_0..P_{n-1} (leading excluded).
    double norm() const { return norm_; }

    // Right-hand side and its z-derivatives at (z, t).
    Complex rhs(Complex z, double t) const;
    Complex rhs_dz(Complex z, double t) const;
    double f(double x, double t) const;
    // k-th partial derivative in x, k = 1..3.
    double f_deriv(int k, double x, double t) const;

    Equation with_omega(double new_omega) const;
    Equation with_coeff(int i, CoeffFn replacement) const;

  private:
    Equation() = default;
    void finalize();

    int n_ = 2;
    double omega_ = 1.0;
    std::vector<CoeffFn> coeffs_;
    std::optional<CoeffFn> leading_;
    LeadingSign leading_sign_ = LeadingSign::None;
    double norm_ = 0.0;
};

// Per-coefficient max of certified sup norms (the norm on the space of
// equations; leading coefficient not included).
double equation_norm(const Equation& eq);

// Certified sign of f on [0, omega]: +1 / -1 when sign-definiteness can be
// established by dense sampling plus Lipschitz slack, 0 otherwise.
int certified_sign(const CoeffFn& f);

}  // namespace polyper

#endif
