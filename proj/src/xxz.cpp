#include "qaffine/xxz.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace qaffine::xxz {

namespace {

using Poly = std::vector<cplx>;  // coefficients, ascending degree

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, cplx(0, 0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

cplx poly_eval(const Poly& p, cplx z) {
    cplx r(0, 0);
    for (size_t i = p.size(); i-- > 0;) r = r * z + p[i];
    return r;
}

Poly poly_scale_arg(const Poly& p, cplx s) {  // p(z*s)
    Poly r = p;
    cplx pw(1, 0);
    for (size_t i = 0; i < r.size(); ++i) {
        r[i] *= pw;
        pw *= s;
    }
    return r;
}

double poly_norm(const Poly& p) {
    double n = 0;
    for (auto c : p) n += std::abs(c);
    return n;
}

std::vector<cplx> poly_roots(const Poly& p) {
    // Trim leading zeros, then companion-matrix eigenvalues.
    Poly q = p;
    while (q.size() > 1 && std::abs(q.back()) < 1e-13 * poly_norm(q)) q.pop_back();
    int deg = static_cast<int>(q.size()) - 1;
    if (deg <= 0) return {};
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -q[i] / q[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<cplx> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

Poly phi_poly(const ChainSpec& spec, cplx shift) {  // prod_k (1 - z*shift/a_k)
    Poly p{cplx(1, 0)};
    for (cplx a : spec.inhomogeneities) p = poly_mul(p, Poly{cplx(1, 0), -shift / a});
    return p;
}

}  // namespace

ChainSpec ChainSpec::homogeneous(int n, cplx q, cplx u, unsigned seed) {
    ChainSpec s;
    s.length = n;
    s.inhomogeneities.assign(n, cplx(1, 0));
    s.q = q;
    s.u = u;
    s.seed = seed;
    s.validate();
    return s;
}

void ChainSpec::validate() const {
    if (length < 1) throw std::invalid_argument("chain length must be >= 1");
    if (length > 12) throw ResourceGuard("chain length capped at 12 (memory guard)");
    if (static_cast<int>(inhomogeneities.size()) != length) {
        throw std::invalid_argument("need one inhomogeneity per site");
    }
    if (std::abs(u) == 0.0) throw std::invalid_argument("twist must be nonzero");
    cplx pw(1, 0);
    for (int m = 1; m <= 2 * length + 4; ++m) {
        pw *= q;
        if (std::abs(pw - cplx(1, 0)) < 1e-6) {
            throw std::invalid_argument("q is too close to a root of unity (degenerate)");
        }
    }
}

Eigen::Matrix4cd r_matrix(cplx x, cplx q) {
    cplx a = cplx(1, 0) - x * q * q;
    cplx b = q * (cplx(1, 0) - x);
    cplx c = cplx(1, 0) - q * q;
    Eigen::Matrix4cd R = Eigen::Matrix4cd::Zero();
    R(0, 0) = a;
    R(3, 3) = a;
    R(1, 1) = b;
    R(2, 2) = b;
    R(1, 2) = x * c;  // |aux down, site up> -> |aux up, site down>
    R(2, 1) = c;      // |aux up, site down> -> |aux down, site up>
    return R;
}

namespace {

// Left-multiplication by a site-local 2x2 operator L (out,in indexed, bit
// value 0 = up) acting on site k of every row index.
Eigen::MatrixXcd apply_local(const Eigen::MatrixXcd& X, int k, const Eigen::Matrix2cd& L) {
    const long dim = X.rows();
    const long bit = 1L << (k - 1);
    Eigen::MatrixXcd Y(dim, X.cols());
    for (long s = 0; s < dim; ++s) {
        int b = (s & bit) ? 1 : 0;
        Y.row(s) = L(b, b) * X.row(s) + L(b, 1 - b) * X.row(s ^ bit);
    }
    return Y;
}

}  // namespace

Eigen::MatrixXcd transfer_matrix(const ChainSpec& spec, cplx z) {
    spec.validate();
    const long dim = 1L << spec.length;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= spec.length; ++k) {
        Eigen::Matrix4cd R = r_matrix(z / spec.inhomogeneities[k - 1], spec.q);
        // Aux blocks of R as site-local operators: index (aux_out, aux_in).
        Eigen::Matrix2cd P, Q, Rp, S;
        P << R(0, 0), 0, 0, R(1, 1);    // aux up -> up
        Q << 0, 0, R(1, 2), 0;          // aux down -> up, site up -> down
        Rp << 0, R(2, 1), 0, 0;         // aux up -> down, site down -> up
        S << R(2, 2), 0, 0, R(3, 3);    // aux down -> down
        Eigen::MatrixXcd nA = apply_local(A, k, P) + apply_local(C, k, Q);
        Eigen::MatrixXcd nB = apply_local(B, k, P) + apply_local(D, k, Q);
        Eigen::MatrixXcd nC = apply_local(A, k, Rp) + apply_local(C, k, S);
        Eigen::MatrixXcd nD = apply_local(B, k, Rp) + apply_local(D, k, S);
        A = std::move(nA);
        B = std::move(nB);
        C = std::move(nC);
        D = std::move(nD);
    }
    cplx up = std::sqrt(spec.u);
    return up * A + (cplx(1, 0) / up) * D;
}

std::vector<Eigen::MatrixXcd> build_transfer(const ChainSpec& spec,
                                             const std::vector<cplx>& samples) {
    if (static_cast<int>(samples.size()) < spec.length + 2) {
        throw std::invalid_argument("need at least N+2 sample points");
    }
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(samples.size());
    for (cplx z : samples) out.push_back(transfer_matrix(spec, z));
    return out;
}

double commutativity_residual(const ChainSpec& spec, int pairs) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> radius(0.6, 1.4), angle(0.0, 6.283185307179586);
    double worst = 0.0;
    for (int p = 0; p < pairs; ++p) {
        cplx z1 = std::polar(radius(rng), angle(rng));
        cplx z2 = std::polar(radius(rng), angle(rng));
        Eigen::MatrixXcd t1 = transfer_matrix(spec, z1);
        Eigen::MatrixXcd t2 = transfer_matrix(spec, z2);
        double num = (t1 * t2 - t2 * t1).norm();
        double den = t1.norm() * t2.norm();
        if (den > 0) worst = std::max(worst, num / den);
    }
    return worst;
}

namespace {

struct TqSystem {
    // Column j carries the coefficient polynomial multiplying Qh_j in
    //   lambda(z) Qh(zq) - up q^M PhiA Qh(z/q) - um q^{N-M} PhiB Qh(zq^3).
    Eigen::MatrixXcd mat;
};

TqSystem tq_matrix(const ChainSpec& spec, const Poly& lambda, int magnon) {
    const int n = spec.length;
    cplx up = std::sqrt(spec.u);
    cplx um = cplx(1, 0) / up;
    Poly phiA = phi_poly(spec, spec.q * spec.q);
    Poly phiB = phi_poly(spec, cplx(1, 0));
    int rows = n + magnon + 1;
    TqSystem sys;
    sys.mat = Eigen::MatrixXcd::Zero(rows, magnon + 1);
    for (int j = 0; j <= magnon; ++j) {
        cplx qj = std::pow(spec.q, j);
        for (size_t i = 0; i < lambda.size(); ++i) {
            sys.mat(i + j, j) += lambda[i] * qj;
        }
        cplx ca = up * std::pow(spec.q, magnon) / qj;
        for (size_t i = 0; i < phiA.size(); ++i) sys.mat(i + j, j) -= ca * phiA[i];
        cplx cb = um * std::pow(spec.q, n - magnon) * qj * qj * qj;
        for (size_t i = 0; i < phiB.size(); ++i) sys.mat(i + j, j) -= cb * phiB[i];
    }
    return sys;
}

// Smallest-singular-vector solve; returns (coefficients, sigma_min ratio).
std::pair<Poly, double> null_vector(const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    double smin = sv(sv.size() - 1);
    Eigen::VectorXcd v = svd.matrixV().col(sv.size() - 1);
    Poly p(v.size());
    for (int i = 0; i < v.size(); ++i) p[i] = v(i);
    return {p, smax > 0 ? smin / smax : 0.0};
}

double tq_validation(const ChainSpec& spec, const Poly& lambda, const Poly& qh, int magnon,
                     cplx uu) {
    cplx up = std::sqrt(uu);
    cplx um = cplx(1, 0) / up;
    Poly phiA = phi_poly(spec, spec.q * spec.q);
    Poly phiB = phi_poly(spec, cplx(1, 0));
    std::mt19937_64 rng(spec.seed + 77);
    std::uniform_real_distribution<double> radius(0.5, 1.5), angle(0.0, 6.283185307179586);
    double worst = 0.0;
    for (int t = 0; t < 6; ++t) {
        cplx z = std::polar(radius(rng), angle(rng));
        cplx t1 = poly_eval(lambda, z) * poly_eval(qh, z * spec.q);
        cplx t2 = up * std::pow(spec.q, magnon) * poly_eval(phiA, z) *
                  poly_eval(qh, z / spec.q);
        cplx t3 = um * std::pow(spec.q, spec.length - magnon) * poly_eval(phiB, z) *
                  poly_eval(qh, z * spec.q * spec.q * spec.q);
        double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
        if (scale < 1e-300) continue;
        worst = std::max(worst, std::abs(t1 - t2 - t3) / scale);
    }
    return worst;
}

// Fit the TQ solution of given degree and twist for one eigenvalue.
std::pair<Poly, double> fit_qh(const ChainSpec& spec, const Poly& lambda, int magnon, cplx uu) {
    ChainSpec dual = spec;
    dual.u = uu;
    auto [p, sigma] = null_vector(tq_matrix(dual, lambda, magnon).mat);
    (void)sigma;
    double res = tq_validation(dual, lambda, p, magnon, uu);
    return {p, res};
}

}  // namespace

relations::BetheContext bethe_context(const ChainSpec& spec, const EigenvalueFit& level) {
    auto ctx = relations::BetheContext::make(cartan_data("A1"), spec.q);
    ctx.roots[1] = level.baxter_roots;
    ctx.twist[1] = std::sqrt(spec.u);
    relations::Driving drv;
    drv.scale = std::pow(spec.q, spec.length - 2 * level.magnon);
    for (cplx a : spec.inhomogeneities) {
        drv.zeros_num.push_back(a);
        drv.zeros_den.push_back(a / (spec.q * spec.q));
    }
    ctx.driving[1] = drv;
    return ctx;
}

SpectrumFit fit_spectrum(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.length;
    const long dim = 1L << n;
    SpectrumFit fit;
    fit.spec = spec;
    fit.commut_residual = commutativity_residual(spec);

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> jitter(0.85, 1.15), angle(0.0, 6.283185307179586);

    // Diagonalization point: retried until the spectrum separates.
    Eigen::MatrixXcd V;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
        cplx z0 = std::polar(jitter(rng), angle(rng));
        Eigen::MatrixXcd t0 = transfer_matrix(spec, z0);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t0, true);
        double scale = t0.norm();
        double gap = 1e300;
        for (long i = 0; i < dim; ++i) {
            for (long j = i + 1; j < dim; ++j) {
                gap = std::min(gap, std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)));
            }
        }
        if (gap < 1e-7 * scale) continue;  // eigenvalue crossing, retry
        V = es.eigenvectors();
        lu = Eigen::PartialPivLU<Eigen::MatrixXcd>(V);
        ok = true;
    }
    if (!ok) throw std::runtime_error("no separating sample found for diagonalization");

    // Samples for interpolation plus validation.
    int ns = n + 3;
    std::vector<cplx> samples;
    for (int j = 0; j < ns + 2; ++j) {
        samples.push_back(std::polar(jitter(rng), 6.283185307179586 * j / (ns + 2) + 0.1));
    }
    std::vector<Eigen::VectorXcd> diag_vals;
    for (cplx z : samples) {
        Eigen::MatrixXcd d = lu.solve(transfer_matrix(spec, z) * V);
        diag_vals.push_back(d.diagonal());
    }

    // Vandermonde least squares on the first ns samples, degree <= N.
    Eigen::MatrixXcd vand(ns, n + 1);
    for (int r = 0; r < ns; ++r) {
        cplx pw(1, 0);
        for (int c = 0; c <= n; ++c) {
            vand(r, c) = pw;
            pw *= samples[r];
        }
    }
    auto vqr = vand.colPivHouseholderQr();

    fit.levels.resize(dim);
    Poly trace_sum(n + 1, cplx(0, 0));
    for (long k = 0; k < dim; ++k) {
        Eigen::VectorXcd rhs(ns);
        for (int r = 0; r < ns; ++r) rhs(r) = diag_vals[r](k);
        Eigen::VectorXcd coef = vqr.solve(rhs);
        EigenvalueFit& lv = fit.levels[k];
        lv.lambda.assign(n + 1, cplx(0, 0));
        for (int c = 0; c <= n; ++c) lv.lambda[c] = coef(c);
        for (int c = 0; c <= n; ++c) trace_sum[c] += lv.lambda[c];
        double scale = poly_norm(lv.lambda);
        for (int r = ns; r < ns + 2; ++r) {
            double dv = std::abs(poly_eval(lv.lambda, samples[r]) - diag_vals[r](k));
            lv.interp_residual = std::max(lv.interp_residual, dv / (scale > 0 ? scale : 1.0));
        }
        fit.max_interp_residual = std::max(fit.max_interp_residual, lv.interp_residual);

        // Baxter fit: smallest magnon degree whose TQ system closes.
        for (int m = 0; m <= n; ++m) {
            auto [qh, res] = fit_qh(spec, lv.lambda, m, spec.u);
            if (res < 1e-8) {
                lv.magnon = m;
                lv.tq_residual = res;
                for (cplx rut : poly_roots(qh)) lv.baxter_roots.push_back(rut / spec.q);
                break;
            }
        }
        if (lv.magnon < 0) {
            throw std::runtime_error("no polynomial Baxter solution of degree <= N found");
        }
        lv.y_plus = std::sqrt(spec.u) * std::pow(spec.q, lv.magnon);
        lv.y_minus = (cplx(1, 0) / std::sqrt(spec.u)) * std::pow(spec.q, n - lv.magnon);
        fit.max_tq_residual = std::max(fit.max_tq_residual, lv.tq_residual);

        auto ctx = bethe_context(spec, lv);
        for (cplx w : lv.baxter_roots) {
            try {
                double r = std::abs(relations::bethe_residual(ctx, 1, w));
                lv.bethe_residual = std::max(lv.bethe_residual, r);
            } catch (const relations::PoleCollision&) {
                ++lv.nongeneric_roots;  // string states; genericity fails
            }
        }
        fit.max_bethe_residual = std::max(fit.max_bethe_residual, lv.bethe_residual);
    }

    // Sum of eigenvalue polynomials equals the trace polynomial.
    std::mt19937_64 rng2(spec.seed + 5);
    for (int t = 0; t < 3; ++t) {
        cplx z = std::polar(jitter(rng2), angle(rng2));
        cplx tr = transfer_matrix(spec, z).trace();
        double dv = std::abs(poly_eval(trace_sum, z) - tr);
        fit.trace_residual = std::max(fit.trace_residual, dv / (1.0 + std::abs(tr)));
    }
    return fit;
}

QQReport verify_qq_polynomial(const ChainSpec& spec, const SpectrumFit& fit) {
    QQReport rep;
    const int n = spec.length;
    Poly phiB = phi_poly(spec, cplx(1, 0));
    cplx up = std::sqrt(spec.u);
    cplx um = cplx(1, 0) / up;
    for (const EigenvalueFit& lv : fit.levels) {
        QQLevelReport lr;
        lr.magnon = lv.magnon;
        // Reconstruct Qh+ from the stored physical roots.
        Poly qhp{cplx(1, 0)};
        for (cplx w : lv.baxter_roots) qhp = poly_mul(qhp, Poly{cplx(1, 0), -1.0 / (w * spec.q)});
        auto [qhm, res] = fit_qh(spec, lv.lambda, n - lv.magnon, cplx(1, 0) / spec.u);
        if (res > 1e-7) {
            lr.residual = res;
            rep.levels.push_back(lr);
            rep.max_residual = std::max(rep.max_residual, res);
            continue;
        }
        for (cplx rut : poly_roots(qhm)) lr.q_minus_roots.push_back(rut / spec.q);

        // Twisted q-Wronskian of the two solutions:
        //   W(z) = up q^M Qh+(z/q) Qh-(zq) - um q^{N-M} Qh-(z/q) Qh+(zq)
        // is proportional to prod_k (1 - z/a_k).
        auto wronskian = [&](const Poly& a, int ma, const Poly& b) {
            Poly t1 = poly_mul(poly_scale_arg(a, cplx(1, 0) / spec.q), poly_scale_arg(b, spec.q));
            Poly t2 = poly_mul(poly_scale_arg(b, cplx(1, 0) / spec.q), poly_scale_arg(a, spec.q));
            cplx c1 = up * std::pow(spec.q, ma);
            cplx c2 = um * std::pow(spec.q, n - ma);
            Poly w(std::max(t1.size(), t2.size()), cplx(0, 0));
            for (size_t i = 0; i < t1.size(); ++i) w[i] += c1 * t1[i];
            for (size_t i = 0; i < t2.size(); ++i) w[i] -= c2 * t2[i];
            return w;
        };
        Poly W = wronskian(qhp, lv.magnon, qhm);
        // Projection onto the known right-hand side.
        cplx num(0, 0), den(0, 0);
        for (size_t i = 0; i < W.size() && i < phiB.size(); ++i) {
            num += std::conj(phiB[i]) * W[i];
            den += std::conj(phiB[i]) * phiB[i];
        }
        lr.alpha = num / den;
        Poly resid = W;
        for (size_t i = 0; i < phiB.size() && i < resid.size(); ++i) resid[i] -= lr.alpha * phiB[i];
        double scale = poly_norm(W);
        lr.residual = scale > 0 ? poly_norm(resid) / scale : 0.0;

        // Swapping Q+ <-> Q- together with their twist data negates W.
        cplx dup = um, dum = up;
        Poly t1 = poly_mul(poly_scale_arg(qhm, cplx(1, 0) / spec.q), poly_scale_arg(qhp, spec.q));
        Poly t2 = poly_mul(poly_scale_arg(qhp, cplx(1, 0) / spec.q), poly_scale_arg(qhm, spec.q));
        Poly Wsw(std::max(t1.size(), t2.size()), cplx(0, 0));
        for (size_t i = 0; i < t1.size(); ++i) Wsw[i] += dup * std::pow(spec.q, n - lv.magnon) * t1[i];
        for (size_t i = 0; i < t2.size(); ++i) Wsw[i] -= dum * std::pow(spec.q, lv.magnon) * t2[i];
        Poly sum = W;
        if (sum.size() < Wsw.size()) sum.resize(Wsw.size(), cplx(0, 0));
        for (size_t i = 0; i < Wsw.size(); ++i) sum[i] += Wsw[i];
        lr.swap_antisymmetry = scale > 0 ? poly_norm(sum) / scale : 0.0;

        rep.levels.push_back(lr);
        rep.max_residual = std::max(rep.max_residual, lr.residual);
        rep.max_swap_antisymmetry = std::max(rep.max_swap_antisymmetry, lr.swap_antisymmetry);
    }
    return rep;
}

}  // namespace qaffine::xxz
