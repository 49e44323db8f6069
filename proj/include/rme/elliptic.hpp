#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace rme {

using cplx = std::complex<double>;

/// Rectangular lattice t*Z + i*Z, t > 0.
struct Lattice {
    double t;
};

/// Eisenstein invariants and half-period values of the Weierstrass P-function.
/// For rectangular lattices all entries are real and e1 > e2 > e3,
/// with e1 = P(t/2), e2 = P((t+i)/2), e3 = P(i/2).
struct EllipticInvariants {
    double g2 = 0.0;
    double g3 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Weierstrass P-function on the rectangular torus C/(tZ + iZ).
///
/// Evaluation reduces z to the fundamental cell and sums the trigonometric
/// q-series; the generators are swapped so the nome satisfies q <= e^{-pi},
/// and the truncation order carries a certified tail bound below 1e-16
/// relative. Derivatives of order >= 2 come from the algebraic identity
/// P'' = 6 P^2 - g2/2 and its Leibniz-differentiated chain, never from
/// finite differences.
class WeierstrassP {
  public:
    explicit WeierstrassP(Lattice lat);

    const Lattice& lattice() const { return lat_; }
    const EllipticInvariants& invariants() const { return inv_; }

    cplx p(cplx z) const;
    cplx dp(cplx z) const;

    /// jet[k] = P^{(k)}(z) for k = 0..order.
    std::vector<cplx> jet(cplx z, int order) const;

    /// Distance from z to the nearest lattice point.
    double lattice_distance(cplx z) const;

  private:
    // Evaluate base-lattice P and P' at the mapped coordinate.
    void eval_base(cplx zeta, cplx& P, cplx& dP) const;

    Lattice lat_;
    EllipticInvariants inv_;
    bool swapped_ = false;  // true: zeta = -i z on Z + (i t)Z; false: zeta = z/t on Z + (i/t)Z
    double beta_ = 0.0;     // Im(tau) of the base lattice, >= 1
    double q2_ = 0.0;       // squared nome e^{-2 pi beta}
    int trunc_ = 0;         // series truncation order
    std::vector<double> ck_;  // k q^{2k} / (1 - q^{2k})
};

/// Invariants of the rectangular lattice t*Z + i*Z (g2, g3 from Eisenstein
/// q-series; e_j from P at the half-periods).
EllipticInvariants invariants(Lattice lat);

}  // namespace rme
