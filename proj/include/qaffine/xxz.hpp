#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qaffine/relations.hpp"

namespace qaffine::xxz {

using cplx = std::complex<double>;

struct ResourceGuard : std::runtime_error {
    explicit ResourceGuard(const std::string& what) : std::runtime_error(what) {}
};

// One inhomogeneous twisted 6-vertex chain.  The auxiliary space is the
// 2-dimensional fundamental module; the twist enters the auxiliary trace
// as diag(u^{1/2}, u^{-1/2}).
struct ChainSpec {
    int length = 1;
    std::vector<cplx> inhomogeneities;  // a_k, size = length
    cplx q{0.7, 0.1};                   // generic by default, documented arbitrary
    cplx u{0.5, 0.0};
    unsigned seed = 1;

    static ChainSpec homogeneous(int n, cplx q = {0.7, 0.1}, cplx u = {0.5, 0.0},
                                 unsigned seed = 1);
    void validate() const;  // N >= 1, N <= 12, q^m != 1 for m <= 2N+4, u != 0
};

// R(x) entries: a = 1 - x q^2 on the diagonal, b = q (1 - x) for
// transmission, c = (1 - q^2) and c' = x (1 - q^2) for reflection; fixed
// bit-exactly here, any gauge-equivalent choice must pass the same suite.
Eigen::Matrix4cd r_matrix(cplx x, cplx q);

// Transfer matrix T(z) = tr_aux[ U R_{0N}(z/a_N) ... R_{01}(z/a_1) ].
Eigen::MatrixXcd transfer_matrix(const ChainSpec& spec, cplx z);

std::vector<Eigen::MatrixXcd> build_transfer(const ChainSpec& spec,
                                             const std::vector<cplx>& samples);

// ||[T(z1),T(z2)]|| / (||T(z1)|| ||T(z2)||), maximized over sampled pairs.
double commutativity_residual(const ChainSpec& spec, int pairs = 5);

struct EigenvalueFit {
    std::vector<cplx> lambda;        // eigenvalue polynomial coefficients
    double interp_residual = 0.0;    // validation of polynomiality
    int magnon = -1;                 // M = deg Q
    std::vector<cplx> baxter_roots;  // roots of Q (physical normalization)
    cplx y_plus{0, 0};               // fitted prefactor constants u^{1/2} q^M
    cplx y_minus{0, 0};
    double tq_residual = 0.0;        // functional-equation validation
    double bethe_residual = 0.0;     // max residual over generic fitted roots
    int nongeneric_roots = 0;        // string-like roots hitting a shifted pole
};

struct SpectrumFit {
    ChainSpec spec;
    double commut_residual = 0.0;
    std::vector<EigenvalueFit> levels;
    double max_interp_residual = 0.0;
    double max_tq_residual = 0.0;
    double max_bethe_residual = 0.0;
    double trace_residual = 0.0;  // sum of eigenvalues vs trace polynomial
};

// Simultaneous diagonalization, eigenvalue interpolation and Baxter fit.
// The TQ equation solved for each level, with Qh(z) = Q(z q^{-1}):
//   lambda(z) Qh(zq) = u^{1/2} q^M PhiA(z) Qh(z/q) + u^{-1/2} q^{N-M} PhiB(z) Qh(zq^3)
// with PhiA(z) = prod_k (1 - z q^2 / a_k), PhiB(z) = prod_k (1 - z / a_k).
SpectrumFit fit_spectrum(const ChainSpec& spec);

struct QQLevelReport {
    int magnon = -1;
    std::vector<cplx> q_minus_roots;  // dual solution, degree N - M
    cplx alpha{0, 0};                 // proportionality constant
    double residual = 0.0;
    double swap_antisymmetry = 0.0;   // q-Wronskian sign check
};

struct QQReport {
    std::vector<QQLevelReport> levels;
    double max_residual = 0.0;
    double max_swap_antisymmetry = 0.0;
};

// For each level solve the dual TQ system (twist u -> 1/u, degree N - M)
// and verify the polynomial QQ identity
//   Q+(z) Q-(z) - u^{-1} q^{N-2M} Q+(z q^2) Q-(z q^{-2}) = alpha prod_k (1 - z q^{-1}/a_k),
// the shifted form of the q-Wronskian of the two solutions.
QQReport verify_qq_polynomial(const ChainSpec& spec, const SpectrumFit& fit);

// Bethe residuals of the fitted roots through the shared Bethe machinery,
// with the chain driving factor q^{N-2M} prod_k (1-w/a_k)/(1-w q^2/a_k).
relations::BetheContext bethe_context(const ChainSpec& spec, const EigenvalueFit& level);

}  // namespace qaffine::xxz
