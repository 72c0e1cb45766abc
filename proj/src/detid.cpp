#include "ssk/detid.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace ssk::detid {

namespace {

void require_distinct(const std::vector<double>& v, const char* what) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j])
                throw std::domain_error(std::string("detid: coincident ") + what);
}

double relative_gap(double lhs, double rhs) {
    double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    if (scale < 1e-300) return std::fabs(lhs - rhs);
    return std::fabs(lhs - rhs) / scale;
}

double evaluate(const Eigen::MatrixXd& m, double product, double* condition) {
    if (condition) {
        auto sv = m.jacobiSvd().singularValues();
        double smin = sv(sv.size() - 1);
        *condition = smin == 0.0 ? HUGE_VAL : sv(0) / smin;
    }
    return relative_gap(m.determinant(), product);
}

} // namespace

double cauchy_residual(const std::vector<double>& x, const std::vector<double>& y,
                       double* condition) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("cauchy_residual: x, y need equal nonzero length");
    require_distinct(x, "x");
    require_distinct(y, "y");
    int n = static_cast<int>(x.size());
    Eigen::MatrixXd m(n, n);
    double product = 1.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double s = x[static_cast<size_t>(k)] + y[static_cast<size_t>(l)];
            if (s == 0.0) throw std::domain_error("cauchy_residual: x_k + y_l = 0");
            m(k, l) = 1.0 / s;
            product /= s;
        }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            product *= (x[static_cast<size_t>(k)] - x[static_cast<size_t>(l)]) *
                       (y[static_cast<size_t>(k)] - y[static_cast<size_t>(l)]);
    return evaluate(m, product, condition);
}

double bordered_cauchy_residual(const std::vector<double>& x,
                                const std::vector<double>& b, double* condition) {
    if (x.empty() || b.size() + 1 != x.size())
        throw std::invalid_argument("bordered_cauchy_residual: need |b| = |x| - 1");
    require_distinct(x, "x");
    require_distinct(b, "b");
    int n = static_cast<int>(x.size());
    Eigen::MatrixXd m(n, n);
    double product = 1.0;
    for (int k = 0; k < n; ++k) m(0, k) = 1.0;
    for (int a = 0; a < n - 1; ++a)
        for (int k = 0; k < n; ++k) {
            double s = x[static_cast<size_t>(k)] + b[static_cast<size_t>(a)];
            if (s == 0.0)
                throw std::domain_error("bordered_cauchy_residual: x_k + b_a = 0");
            m(a + 1, k) = 1.0 / s;
            product /= s;
        }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            product *= x[static_cast<size_t>(k)] - x[static_cast<size_t>(l)];
    for (int a = 0; a < n - 1; ++a)
        for (int c = a + 1; c < n - 1; ++c)
            product *= b[static_cast<size_t>(a)] - b[static_cast<size_t>(c)];
    return evaluate(m, product, condition);
}

double krattenthaler_residual(const std::vector<double>& x, const std::vector<double>& a,
                              const std::vector<double>& b, double* condition) {
    if (x.empty() || a.size() + 1 != x.size() || b.size() + 1 != x.size())
        throw std::invalid_argument("krattenthaler_residual: need |a| = |b| = |x| - 1");
    require_distinct(x, "x");
    int n = static_cast<int>(x.size());
    Eigen::MatrixXd m(n, n);
    double product = 1.0;
    for (int k = 0; k < n; ++k) {
        double running = 1.0;
        m(0, k) = running;
        for (int row = 1; row < n; ++row) {
            double den = x[static_cast<size_t>(k)] + b[static_cast<size_t>(row - 1)];
            if (den == 0.0)
                throw std::domain_error("krattenthaler_residual: x_k + b_b = 0");
            running *= (x[static_cast<size_t>(k)] + a[static_cast<size_t>(row - 1)]) / den;
            m(row, k) = running;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            product *= x[static_cast<size_t>(k)] - x[static_cast<size_t>(l)];
    for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j)
            product *= a[static_cast<size_t>(i)] - b[static_cast<size_t>(j)];
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n - 1; ++j)
            product /= x[static_cast<size_t>(k)] + b[static_cast<size_t>(j)];
    return evaluate(m, product, condition);
}

} // namespace ssk::detid
