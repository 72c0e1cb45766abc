#include "ssk/oracle.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ssk/detail/determinant.hpp"
#include "ssk/gamma_kit.hpp"
#include "ssk/schur.hpp"

namespace ssk::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

int refinements_for(const QuadratureConfig& cfg) {
    int levels = 1;
    while ((1 << levels) < cfg.node_budget && levels < 20) ++levels;
    return levels;
}

// Complex-valued integrand integrated as two real tanh-sinh passes sharing a
// per-abscissa cache. The functor receives (x, xc) with xc the signed
// distance to the nearest endpoint, which is what keeps endpoint
// singularities evaluable at full precision. The cache must be keyed by xc,
// not x: at deep refinement levels x rounds onto the endpoint while xc still
// separates the nodes, and a key collision there hands the singular factor a
// stale value.
IntegralResult integrate_complex(const std::function<cplx(double, double)>& f, double a,
                                 double b, const QuadratureConfig& cfg) {
    boost::math::quadrature::tanh_sinh<double> integrator(refinements_for(cfg));
    std::map<double, cplx> cache;
    auto eval = [&](double x, double xc) {
        auto it = cache.find(xc);
        if (it == cache.end()) it = cache.emplace(xc, f(x, xc)).first;
        return it->second;
    };
    double err_re = 0.0, err_im = 0.0;
    double re, im;
    if (cfg.endpoint_singular) {
        re = integrator.integrate([&](double x, double xc) { return eval(x, xc).real(); },
                                  a, b, cfg.tolerance, &err_re);
        im = integrator.integrate([&](double x, double xc) { return eval(x, xc).imag(); },
                                  a, b, cfg.tolerance, &err_im);
    } else {
        // one-argument form: xc reconstructed from x (loses precision at the
        // endpoints; kept for comparison runs)
        auto xc_of = [a, b](double x) { return (x - a < b - x) ? x - a : x - b; };
        re = integrator.integrate([&](double x) { return eval(x, xc_of(x)).real(); }, a,
                                  b, cfg.tolerance, &err_re);
        im = integrator.integrate([&](double x) { return eval(x, xc_of(x)).imag(); }, a,
                                  b, cfg.tolerance, &err_im);
    }
    return {cplx(re, im), err_re + err_im};
}

void require_convergence(const IntegralResult& r, const char* where) {
    if (!(r.error_estimate < 1e-3))
        throw std::runtime_error(std::string(where) + ": quadrature did not converge");
}

void check_integrable(const kernel::KernelParams& params) {
    if (!((params.sigma + params.tau).real() > -0.9))
        throw std::domain_error(
            "oracle: Re(sigma+tau) <= -0.9, outside the integrable-singularity margin");
}

// sin(psi/2) for psi in [0, 2pi], computed from the distance to the nearest
// endpoint: sin(psi/2) = sin(|xc|/2) exactly on both halves.
double half_sine(double xc) { return std::sin(std::fabs(xc) / 2.0); }

} // namespace

cplx lobachevsky_closed(cplx mu, cplx b) {
    if (gamma::is_nonpositive_integer(mu))
        throw gamma::pole_error("lobachevsky_closed: Gamma(mu) pole");
    cplx log_head = (1.0 - mu) * std::log(2.0) + std::log(kPi) + gamma::log_gamma(mu) +
                    cplx(0.0, 1.0) * b * (kPi / 2.0);
    return std::exp(log_head) * gamma::reciprocal_gamma((mu + b + 1.0) / 2.0) *
           gamma::reciprocal_gamma((mu - b + 1.0) / 2.0);
}

IntegralResult lobachevsky_numeric(cplx mu, cplx b, const QuadratureConfig& cfg) {
    if (!(mu.real() > 0.0))
        throw std::domain_error("lobachevsky_numeric: Re mu > 0 required");
    // sin(phi) = sin(|xc|) on [0, pi] for xc the distance to the nearest end
    auto f = [mu, b](double x, double xc) {
        return std::exp((mu - 1.0) * std::log(std::sin(std::fabs(xc))) +
                        cplx(0.0, 1.0) * b * x);
    };
    IntegralResult r = integrate_complex(f, 0.0, kPi, cfg);
    require_convergence(r, "lobachevsky_numeric");
    return r;
}

cplx coefficient_det_reduction(const sig::Signature& m, const kernel::KernelParams& params,
                               const QuadratureConfig& cfg) {
    int n = params.n;
    if (m.n() != n) throw std::invalid_argument("coefficient_det_reduction: size mismatch");
    if (n > 4) throw std::domain_error("coefficient_det_reduction: n <= 4 only");
    check_integrable(params);
    cplx st = params.sigma + params.tau;
    cplx smt = params.sigma - params.tau;

    std::vector<cplx> entries(static_cast<size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            double freq = static_cast<double>(k - 1 - m[j - 1]);
            auto f = [st, smt, freq](double x, double xc) {
                return std::exp(st * std::log(half_sine(xc)) +
                                cplx(0.0, 1.0) * (0.5 * smt * (x - kPi) + freq * x));
            };
            IntegralResult r = integrate_complex(f, 0.0, kTwoPi, cfg);
            require_convergence(r, "coefficient_det_reduction");
            entries[static_cast<size_t>(k - 1) * n + (j - 1)] = r.value;
        }
    }
    cplx det = detail::determinant(entries, n);
    double sign = (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * det / std::pow(kTwoPi, n);
}

cplx coefficient_full_quadrature(const sig::Signature& m, const kernel::KernelParams& params,
                                 const QuadratureConfig& cfg) {
    int n = params.n;
    if (m.n() != n) throw std::invalid_argument("coefficient_full_quadrature: size mismatch");
    if (n > 2) throw std::domain_error("coefficient_full_quadrature: n <= 2 only");
    check_integrable(params);
    cplx st = params.sigma + params.tau;
    cplx smt = params.sigma - params.tau;
    const cplx i1(0.0, 1.0);

    if (n == 1) {
        double m0 = static_cast<double>(m[0]);
        auto f = [st, smt, m0, i1](double x, double xc) {
            return std::exp(st * std::log(half_sine(xc)) +
                            i1 * (0.5 * smt * (x - kPi) - m0 * x));
        };
        IntegralResult r = integrate_complex(f, 0.0, kTwoPi, cfg);
        require_convergence(r, "coefficient_full_quadrature");
        return r.value / kTwoPi;
    }

    double m1 = static_cast<double>(m[0]), m2 = static_cast<double>(m[1]);
    QuadratureConfig inner_cfg = cfg;
    auto outer = [&](double x1, double xc1) {
        cplx l1 = std::exp(st * std::log(half_sine(xc1)) + i1 * 0.5 * smt * (x1 - kPi));
        auto inner = [&, x1](double x2, double xc2) {
            cplx l2 =
                std::exp(st * std::log(half_sine(xc2)) + i1 * 0.5 * smt * (x2 - kPi));
            cplx num = std::exp(i1 * (m1 * x1 + m2 * x2)) -
                       std::exp(i1 * (m1 * x2 + m2 * x1));
            cplx delta = std::exp(i1 * x1) - std::exp(i1 * x2);
            return l2 * std::conj(num) * delta;
        };
        IntegralResult r = integrate_complex(inner, 0.0, kTwoPi, inner_cfg);
        return l1 * r.value;
    };
    IntegralResult r = integrate_complex(outer, 0.0, kTwoPi, cfg);
    require_convergence(r, "coefficient_full_quadrature");
    return r.value / (kTwoPi * kTwoPi * 2.0);
}

double orthogonality_residual(const sig::Signature& m1, const sig::Signature& m2, int n,
                              const QuadratureConfig& cfg) {
    (void)cfg;   // grid size is set by the bandwidth, not the budget
    if (n > 2) throw std::domain_error("orthogonality_residual: n <= 2 only");
    if (m1.n() != n || m2.n() != n)
        throw std::invalid_argument("orthogonality_residual: size mismatch");

    long band = 0;
    for (long v : m1.labels()) band = std::max(band, std::labs(v));
    for (long v : m2.labels()) band = std::max(band, std::labs(v));
    long N = 2 * (2 * band + 2 * n) + 1;   // outruns every Fourier mode present

    cplx acc = 0.0;
    if (n == 1) {
        for (long k = 0; k < N; ++k) {
            double psi = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
            schur::EigenAngles ang({psi});
            acc += schur::character(m1, ang) * std::conj(schur::character(m2, ang));
        }
        acc /= static_cast<double>(N);
    } else {
        for (long k1 = 0; k1 < N; ++k1) {
            double p1 = kTwoPi * static_cast<double>(k1) / static_cast<double>(N);
            for (long k2 = 0; k2 < N; ++k2) {
                double p2 = kTwoPi * static_cast<double>(k2) / static_cast<double>(N);
                cplx d = std::exp(cplx(0.0, p1)) - std::exp(cplx(0.0, p2));
                double w = std::norm(d);
                if (w == 0.0) continue;
                schur::EigenAngles ang({p1, p2});
                acc += schur::character(m1, ang) * std::conj(schur::character(m2, ang)) * w;
            }
        }
        acc /= static_cast<double>(N) * static_cast<double>(N) * 2.0;
    }
    double expected = (m1 == m2) ? 1.0 : 0.0;
    return std::abs(acc - expected);
}

double gauss_2f1_check(cplx p, cplx q, long terms) {
    if (!((p + q).real() > 1.0))
        throw std::domain_error("gauss_2f1_check: Re(p+q) > 1 required");
    cplx term = 1.0, sum = 1.0;
    for (long k = 0; k < terms; ++k) {
        double kk = static_cast<double>(k);
        term *= (kk + 1.0 - p) * (kk + 1.0 - q) / ((kk + 1.0) * (kk + 1.0));
        sum += term;
        if (term == cplx(0.0, 0.0)) break;   // terminating series
    }
    cplx closed = std::exp(gamma::log_gamma(p + q - 1.0)) * gamma::reciprocal_gamma(p) *
                  gamma::reciprocal_gamma(q);
    return std::abs(sum - closed);
}

} // namespace ssk::oracle
