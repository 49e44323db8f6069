#include "rme/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace rme {

namespace {

constexpr double kPi = std::numbers::pi;

double round_half_down(double x) { return std::floor(x + 0.5); }

}  // namespace

WeierstrassP::WeierstrassP(Lattice lat) : lat_(lat) {
    if (!(lat_.t > 0.0)) throw std::invalid_argument("Lattice: t must be positive");

    // Swap generators so the base lattice Z + (i beta) Z has beta >= 1.
    swapped_ = lat_.t >= 1.0;
    beta_ = swapped_ ? lat_.t : 1.0 / lat_.t;
    q2_ = std::exp(-2.0 * kPi * beta_);

    // Truncation with certified tail: the k-th term of every series used here
    // is bounded by C k^5 e^{-pi beta k} after the worst-case cos/sin growth
    // e^{pi beta k} over the reduced cell. Choose K so the remainder is below
    // 1e-18 absolute in series units.
    const double r = std::exp(-kPi * beta_);
    int K = 4;
    double tail = 1.0;
    while (K < 400) {
        // tail <= sum_{k>K} k^5 r^k <= (K+1)^5 r^{K+1} / (1-r)^2
        tail = std::pow(K + 1.0, 5) * std::pow(r, K + 1.0) / ((1.0 - r) * (1.0 - r));
        if (tail < 1e-18) break;
        ++K;
    }
    if (tail >= 1e-18) throw TruncationError("WeierstrassP: tail bound not met");
    trunc_ = K;

    ck_.resize(static_cast<size_t>(trunc_) + 1, 0.0);
    double q2k = 1.0;
    for (int k = 1; k <= trunc_; ++k) {
        q2k *= q2_;
        ck_[static_cast<size_t>(k)] = k * q2k / (1.0 - q2k);
    }

    // Half-period values by direct evaluation.
    const double t = lat_.t;
    inv_.e1 = p(cplx(t / 2, 0)).real();
    inv_.e2 = p(cplx(t / 2, 0.5)).real();
    inv_.e3 = p(cplx(0, 0.5)).real();

    // Eisenstein series E4, E6 of the base lattice, rescaled to t Z + i Z.
    double s3 = 0.0, s5 = 0.0;
    q2k = 1.0;
    for (int k = 1; k <= trunc_; ++k) {
        q2k *= q2_;
        const double d = q2k / (1.0 - q2k);
        s3 += k * k * k * d;
        s5 += k * k * k * k * k * d;
    }
    const double g2b = 4.0 * std::pow(kPi, 4) / 3.0 * (1.0 + 240.0 * s3);
    const double g3b = 8.0 * std::pow(kPi, 6) / 27.0 * (1.0 - 504.0 * s5);
    if (swapped_) {
        inv_.g2 = g2b;        // i^{-4} = 1
        inv_.g3 = -g3b;       // i^{-6} = -1
    } else {
        inv_.g2 = g2b / std::pow(t, 4);
        inv_.g3 = g3b / std::pow(t, 6);
    }
}

double WeierstrassP::lattice_distance(cplx z) const {
    const double t = lat_.t;
    const double x = z.real() - t * round_half_down(z.real() / t);
    const double y = z.imag() - round_half_down(z.imag());
    return std::hypot(x, y);
}

void WeierstrassP::eval_base(cplx zeta, cplx& P, cplx& dP) const {
    // Reduce to the centered cell of Z + (i beta) Z.
    double x = zeta.real() - round_half_down(zeta.real());
    double y = zeta.imag() - beta_ * round_half_down(zeta.imag() / beta_);
    const cplx w(x, y);
    if (std::abs(w) < 1e-13)
        throw PoleError("WeierstrassP: evaluation at a lattice point");

    const cplx s = std::sin(kPi * w);
    const cplx c = std::cos(kPi * w);
    const cplx s2 = s * s;
    P = kPi * kPi / s2 - kPi * kPi / 3.0;
    dP = -2.0 * kPi * kPi * kPi * c / (s2 * s);

    // sum_k c_k (1 - cos(2 pi k w)),  c_k = k q^{2k}/(1-q^{2k})
    cplx sum_p = 0.0, sum_dp = 0.0;
    for (int k = 1; k <= trunc_; ++k) {
        const cplx e = std::exp(cplx(0, 2.0 * kPi * k) * w);
        const cplx cosk = 0.5 * (e + 1.0 / e);
        const cplx sink = cplx(0, -0.5) * (e - 1.0 / e);
        sum_p += ck_[static_cast<size_t>(k)] * (1.0 - cosk);
        sum_dp += ck_[static_cast<size_t>(k)] * static_cast<double>(k) * sink;
    }
    P += 8.0 * kPi * kPi * sum_p;
    dP += 16.0 * kPi * kPi * kPi * sum_dp;
}

cplx WeierstrassP::p(cplx z) const {
    cplx P, dP;
    if (swapped_) {
        eval_base(cplx(0, -1) * z, P, dP);
        return -P;
    }
    eval_base(z / lat_.t, P, dP);
    return P / (lat_.t * lat_.t);
}

cplx WeierstrassP::dp(cplx z) const {
    cplx P, dP;
    if (swapped_) {
        // P(z) = -Pb(-iz)  =>  P'(z) = i Pb'(-iz)
        eval_base(cplx(0, -1) * z, P, dP);
        return cplx(0, 1) * dP;
    }
    eval_base(z / lat_.t, P, dP);
    return dP / std::pow(lat_.t, 3);
}

std::vector<cplx> WeierstrassP::jet(cplx z, int order) const {
    std::vector<cplx> j(static_cast<size_t>(order) + 1);
    cplx P, dP;
    if (swapped_) {
        eval_base(cplx(0, -1) * z, P, dP);
        j[0] = -P;
        if (order >= 1) j[1] = cplx(0, 1) * dP;
    } else {
        eval_base(z / lat_.t, P, dP);
        j[0] = P / (lat_.t * lat_.t);
        if (order >= 1) j[1] = dP / std::pow(lat_.t, 3);
    }
    if (order >= 2) j[2] = 6.0 * j[0] * j[0] - inv_.g2 / 2.0;
    // P^{(k+2)} = 6 (P^2)^{(k)} = 6 sum_j C(k,j) P^{(j)} P^{(k-j)}
    for (int k = 1; k + 2 <= order; ++k) {
        cplx acc = 0.0;
        double binom = 1.0;
        for (int m = 0; m <= k; ++m) {
            acc += binom * j[static_cast<size_t>(m)] * j[static_cast<size_t>(k - m)];
            binom = binom * (k - m) / (m + 1.0);
        }
        j[static_cast<size_t>(k + 2)] = 6.0 * acc;
    }
    return j;
}

EllipticInvariants invariants(Lattice lat) { return WeierstrassP(lat).invariants(); }

}  // namespace rme
