#include "polyper/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "polyper/errors.hpp"

namespace polyper {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Golden-section maximization of |f| on [lo, hi].
double golden_max_abs(const CoeffFn& f, double lo, double hi) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = std::abs(f.eval(x1));
    double f2 = std::abs(f.eval(x2));
    for (int it = 0; it < 80 && (b - a) > 1e-14 * (1.0 + std::abs(b)); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = std::abs(f.eval(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = std::abs(f.eval(x1));
        }
    }
    return std::max(f1, f2);
}

}  // namespace

CoeffFn::CoeffFn(std::vector<double> poly, std::vector<Harmonic> harmonics, double omega)
    : poly_(std::move(poly)), harmonics_(std::move(harmonics)), omega_(omega) {
    if (!(omega_ > 0.0)) throw Error("CoeffFn: omega must be positive");
    while (!poly_.empty() && poly_.back() == 0.0) poly_.pop_back();
    std::erase_if(harmonics_, [](const Harmonic& h) { return h.a == 0.0 && h.b == 0.0; });
    std::set<int> seen;
    for (const auto& h : harmonics_) {
        if (h.k <= 0) throw Error("CoeffFn: harmonic index must be positive");
        if (!seen.insert(h.k).second) throw Error("CoeffFn: duplicate harmonic index");
    }
}

double CoeffFn::eval(double t) const {
    double v = 0.0;
    for (size_t j = poly_.size(); j-- > 0;) v = v * t + poly_[j];
    const double base = kTwoPi / omega_;
    for (const auto& h : harmonics_) {
        const double ang = base * h.k * t;
        v += h.a * std::cos(ang) + h.b * std::sin(ang);
    }
    return v;
}

CoeffFn CoeffFn::derivative() const {
    std::vector<double> dp;
    for (size_t j = 1; j < poly_.size(); ++j) dp.push_back(static_cast<double>(j) * poly_[j]);
    std::vector<Harmonic> dh;
    const double base = kTwoPi / omega_;
    for (const auto& h : harmonics_) {
        const double nu = base * h.k;
        dh.push_back({h.k, h.b * nu, -h.a * nu});
    }
    return CoeffFn(std::move(dp), std::move(dh), omega_);
}

double CoeffFn::coeff_sum_bound() const {
    const double m = std::max(1.0, omega_);
    double bound = 0.0, pw = 1.0;
    for (double c : poly_) {
        bound += std::abs(c) * pw;
        pw *= m;
    }
    for (const auto& h : harmonics_) bound += std::abs(h.a) + std::abs(h.b);
    return bound;
}

SupNorm CoeffFn::sup_norm() const {
    SupNorm out;
    out.certified_upper = coeff_sum_bound();
    const int m = 4096;
    double best = 0.0;
    int best_i = 0;
    for (int i = 0; i <= m; ++i) {
        const double t = omega_ * static_cast<double>(i) / m;
        const double v = std::abs(eval(t));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double h = omega_ / m;
    const double lo = std::max(0.0, omega_ * best_i / m - h);
    const double hi = std::min(omega_, omega_ * best_i / m + h);
    out.sampled_max = std::max(best, golden_max_abs(*this, lo, hi));
    // The polish is a sampling refinement; never report above the certificate.
    out.sampled_max = std::min(out.sampled_max, out.certified_upper);
    return out;
}

CoeffFn CoeffFn::scaled(double s) const {
    std::vector<double> p = poly_;
    for (double& c : p) c *= s;
    std::vector<Harmonic> h = harmonics_;
    for (auto& hh : h) {
        hh.a *= s;
        hh.b *= s;
    }
    return CoeffFn(std::move(p), std::move(h), omega_);
}

CoeffFn CoeffFn::time_scaled(double s) const {
    if (!(s > 0.0)) throw Error("CoeffFn: time scale must be positive");
    std::vector<double> p = poly_;
    double pw = 1.0;
    for (double& c : p) {
        c *= pw;
        pw *= s;
    }
    // cos(2 pi k (s t) / omega) = cos(2 pi k t / (omega / s))
    return CoeffFn(std::move(p), harmonics_, omega_ / s);
}

int certified_sign(const CoeffFn& f) {
    const double lip = f.derivative().coeff_sum_bound();
    int m = 4096;
    for (int round = 0; round < 6; ++round, m *= 4) {
        const double h = f.omega() / m;
        const double slack = 0.5 * lip * h;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= m; ++i) {
            const double v = f.eval(f.omega() * static_cast<double>(i) / m);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (lo - slack > 0.0) return +1;
        if (hi + slack < 0.0) return -1;
        if (lo <= 0.0 && hi >= 0.0) return 0;  // sign change witnessed
    }
    return 0;  // could not certify; conservative
}

Equation::Equation(int n, double omega, std::vector<CoeffFn> coeffs,
                   std::optional<CoeffFn> leading) {
    n_ = n;
    omega_ = omega;
    coeffs_ = std::move(coeffs);
    leading_ = std::move(leading);
    finalize();
    if (leading_) {
        const int s = certified_sign(*leading_);
        if (s == 0)
            throw VanishingLeading("leading coefficient is not certifiably nonvanishing on [0, omega]");
        leading_sign_ = s > 0 ? LeadingSign::Positive : LeadingSign::Negative;
    }
}

Equation Equation::unchecked(int n, double omega, std::vector<CoeffFn> coeffs,
                             std::optional<CoeffFn> leading) {
    Equation eq;
    eq.n_ = n;
    eq.omega_ = omega;
    eq.coeffs_ = std::move(coeffs);
    eq.leading_ = std::move(leading);
    eq.finalize();
    if (eq.leading_) {
        const int s = certified_sign(*eq.leading_);
        eq.leading_sign_ = s > 0   ? LeadingSign::Positive
                           : s < 0 ? LeadingSign::Negative
                                   : LeadingSign::Indefinite;
    }
    return eq;
}

void Equation::finalize() {
    if (n_ < 2) throw Error("Equation: degree must be at least 2");
    if (!(omega_ > 0.0)) throw Error("Equation: omega must be positive");
    if (coeffs_.size() != static_cast<size_t>(n_))
        throw Error("Equation: expected exactly n coefficient functions P_0..P_{n-1}");
    for (const auto& c : coeffs_)
        if (c.omega() != omega_) throw Error("Equation: all coefficients must share omega");
    if (leading_ && leading_->omega() != omega_)
        throw Error("Equation: leading coefficient must share omega");
    norm_ = 0.0;
    for (const auto& c : coeffs_) norm_ = std::max(norm_, c.sup_norm().certified_upper);
}

Complex Equation::rhs(Complex z, double t) const {
    Complex acc = leading_ ? Complex(leading_->eval(t)) : Complex(1.0);
    for (int i = n_ - 1; i >= 0; --i) acc = acc * z + coeffs_[static_cast<size_t>(i)].eval(t);
    return acc;
}

Complex Equation::rhs_dz(Complex z, double t) const {
    Complex acc = static_cast<double>(n_) * (leading_ ? Complex(leading_->eval(t)) : Complex(1.0));
    for (int i = n_ - 1; i >= 1; --i)
        acc = acc * z + static_cast<double>(i) * coeffs_[static_cast<size_t>(i)].eval(t);
    return acc;
}

double Equation::f(double x, double t) const {
    double acc = leading_ ? leading_->eval(t) : 1.0;
    for (int i = n_ - 1; i >= 0; --i) acc = acc * x + coeffs_[static_cast<size_t>(i)].eval(t);
    return acc;
}

double Equation::f_deriv(int k, double x, double t) const {
    // falling factorial i (i-1) ... (i-k+1)
    auto ff = [k](int i) {
        double v = 1.0;
        for (int j = 0; j < k; ++j) v *= static_cast<double>(i - j);
        return v;
    };
    double acc = ff(n_) * (leading_ ? leading_->eval(t) : 1.0);
    for (int i = n_ - 1; i >= k; --i)
        acc = acc * x + ff(i) * coeffs_[static_cast<size_t>(i)].eval(t);
    if (n_ < k) return 0.0;
    return acc;
}

Equation Equation::with_omega(double new_omega) const {
    std::vector<CoeffFn> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.emplace_back(c.poly(), c.harmonics(), new_omega);
    std::optional<CoeffFn> lead;
    if (leading_) lead = CoeffFn(leading_->poly(), leading_->harmonics(), new_omega);
    return Equation(n_, new_omega, std::move(cs), std::move(lead));
}

Equation Equation::with_coeff(int i, CoeffFn replacement) const {
    std::vector<CoeffFn> cs = coeffs_;
    cs[static_cast<size_t>(i)] = std::move(replacement);
    return Equation(n_, omega_, std::move(cs), leading_);
}

double equation_norm(const Equation& eq) { return eq.norm(); }

}  // namespace polyper
