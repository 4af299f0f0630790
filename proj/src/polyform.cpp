#include "hyperlam/polyform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperlam {

double WeightVector::norm(double p) const {
    double s = 0.0;
    for (double v : entries) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

bool WeightVector::is_normalized(double tol) const {
    double s = 0.0;
    for (double v : entries) s += std::pow(std::abs(v), declared_norm_p);
    return std::abs(s - 1.0) <= tol;
}

void ClassWeights::validate() const {
    spec.validate();
    if (a.size() != spec.sizes.size())
        throw std::invalid_argument("class weight count must match the class count");
    for (double v : a)
        if (!(v >= 0.0)) throw std::invalid_argument("class weights must be nonnegative");
}

namespace {

double factorial(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

double int_binom(long long n, int r) {
    if (n < r) return 0.0;
    double v = 1.0;
    for (int i = 0; i < r; ++i) v = v * static_cast<double>(n - i) / (i + 1);
    return v;
}

}  // namespace

double evaluate(const Hypergraph& g, std::span<const double> x, bool compensated) {
    if (x.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("weight vector length must equal the graph order");
    const int r = g.uniformity();
    const auto& flat = g.flat_edges();
    double sum = 0.0, carry = 0.0;
    for (std::size_t base = 0; base < flat.size(); base += r) {
        double prod = x[flat[base]];
        for (int j = 1; j < r; ++j) prod *= x[flat[base + j]];
        if (compensated) {
            const double y = prod - carry;
            const double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        } else {
            sum += prod;
        }
    }
    return factorial(r) * sum;
}

std::vector<double> gradient(const Hypergraph& g, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("weight vector length must equal the graph order");
    const int r = g.uniformity();
    const double rfact = factorial(r);
    const auto& flat = g.flat_edges();
    std::vector<double> grad(g.order(), 0.0);
    std::vector<double> pre(r), suf(r);
    for (std::size_t base = 0; base < flat.size(); base += r) {
        pre[0] = 1.0;
        for (int j = 1; j < r; ++j) pre[j] = pre[j - 1] * x[flat[base + j - 1]];
        suf[r - 1] = 1.0;
        for (int j = r - 2; j >= 0; --j) suf[j] = suf[j + 1] * x[flat[base + j + 1]];
        for (int j = 0; j < r; ++j) grad[flat[base + j]] += rfact * pre[j] * suf[j];
    }
    return grad;
}

std::vector<double> elementary_symmetric(std::span<const double> y, int max_degree) {
    std::vector<double> e(static_cast<std::size_t>(max_degree) + 1, 0.0);
    e[0] = 1.0;
    int seen = 0;
    for (double v : y) {
        ++seen;
        for (int j = std::min(seen, max_degree); j >= 1; --j) e[j] += v * e[j - 1];
    }
    return e;
}

double reduced_evaluate_chromatic3(const ClassWeights& cw) {
    cw.validate();
    if (cw.spec.kind != PartitionKind::Chromatic)
        throw std::invalid_argument("reduced_evaluate_chromatic3 needs a Chromatic spec");
    const auto& n = cw.spec.sizes;
    const auto& a = cw.a;
    const int k = cw.spec.classes();
    double total = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            total += int_binom(n[i], 2) * n[j] * a[i] * a[i] * a[j] +
                     int_binom(n[j], 2) * n[i] * a[j] * a[j] * a[i];
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int m = j + 1; m < k; ++m)
                total += static_cast<double>(n[i]) * n[j] * n[m] * a[i] * a[j] * a[m];
    return total;
}

namespace {

// Coefficients of (1 + a z)^n up to degree cap: C(n, j) a^j.
std::vector<double> class_poly(int n, double a, int cap) {
    const int top = std::min(n, cap);
    std::vector<double> c(static_cast<std::size_t>(cap) + 1, 0.0);
    double aj = 1.0;
    for (int j = 0; j <= top; ++j) {
        c[j] = int_binom(n, j) * aj;
        aj *= a;
    }
    return c;
}

std::vector<double> truncated_product(const std::vector<double>& f, const std::vector<double>& g,
                                      int cap) {
    std::vector<double> out(static_cast<std::size_t>(cap) + 1, 0.0);
    for (int i = 0; i <= cap; ++i) {
        if (f[i] == 0.0) continue;
        for (int j = 0; i + j <= cap; ++j) out[i + j] += f[i] * g[j];
    }
    return out;
}

}  // namespace

double reduced_evaluate_chromatic(const ClassWeights& cw, int r) {
    cw.validate();
    if (cw.spec.kind != PartitionKind::Chromatic)
        throw std::invalid_argument("reduced_evaluate_chromatic needs a Chromatic spec");
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    const auto& n = cw.spec.sizes;
    const auto& a = cw.a;
    const int k = cw.spec.classes();
    std::vector<double> prod(static_cast<std::size_t>(r) + 1, 0.0);
    prod[0] = 1.0;
    for (int i = 0; i < k; ++i) prod = truncated_product(prod, class_poly(n[i], a[i], r), r);
    double within = 0.0;
    for (int i = 0; i < k; ++i) within += int_binom(n[i], r) * std::pow(a[i], r);
    return prod[r] - within;
}

std::vector<double> reduced_gradient_chromatic(const ClassWeights& cw, int r) {
    cw.validate();
    if (cw.spec.kind != PartitionKind::Chromatic)
        throw std::invalid_argument("reduced_gradient_chromatic needs a Chromatic spec");
    const auto& n = cw.spec.sizes;
    const auto& a = cw.a;
    const int k = cw.spec.classes();
    std::vector<double> grad(k, 0.0);
    for (int t = 0; t < k; ++t) {
        std::vector<double> rest(static_cast<std::size_t>(r) + 1, 0.0);
        rest[0] = 1.0;
        for (int i = 0; i < k; ++i)
            if (i != t) rest = truncated_product(rest, class_poly(n[i], a[i], r), r);
        double d = 0.0, ajm1 = 1.0;
        for (int j = 1; j <= std::min(n[t], r); ++j) {
            d += j * int_binom(n[t], j) * ajm1 * rest[r - j];
            ajm1 *= a[t];
        }
        grad[t] = d - r * int_binom(n[t], r) * std::pow(a[t], r - 1);
    }
    return grad;
}

double reduced_evaluate_multipartite(const ClassWeights& cw, int r) {
    cw.validate();
    if (cw.spec.kind != PartitionKind::Partite)
        throw std::invalid_argument("reduced_evaluate_multipartite needs a Partite spec");
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    const int k = cw.spec.classes();
    std::vector<double> y(k);
    for (int i = 0; i < k; ++i) y[i] = cw.spec.sizes[i] * cw.a[i];
    return factorial(r) * elementary_symmetric(y, r)[r];
}

std::vector<double> reduced_gradient_multipartite(const ClassWeights& cw, int r) {
    cw.validate();
    if (cw.spec.kind != PartitionKind::Partite)
        throw std::invalid_argument("reduced_gradient_multipartite needs a Partite spec");
    const int k = cw.spec.classes();
    const double rfact = factorial(r);
    std::vector<double> y(k);
    for (int i = 0; i < k; ++i) y[i] = cw.spec.sizes[i] * cw.a[i];
    std::vector<double> grad(k, 0.0);
    std::vector<double> others;
    others.reserve(k - 1);
    for (int t = 0; t < k; ++t) {
        others.clear();
        for (int i = 0; i < k; ++i)
            if (i != t) others.push_back(y[i]);
        grad[t] = rfact * cw.spec.sizes[t] * elementary_symmetric(others, r - 1)[r - 1];
    }
    return grad;
}

}  // namespace hyperlam
