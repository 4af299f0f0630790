#include "hyperlam/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlam {

namespace {

double factorial(int r) {
    double f = 1.0;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double binom(std::int64_t n, int r) {
    if (r < 0 || n < r) return 0.0;
    double v = 1.0;
    for (int i = 0; i < r; ++i) v = v * static_cast<double>(n - i) / (i + 1);
    return v;
}

double real_binom(double x, int r) {
    if (x <= r - 1) return 0.0;
    double v = 1.0;
    for (int i = 0; i < r; ++i) v = v * (x - i) / (i + 1);
    return v;
}

double bound_l1(int k, int r) {
    require(r >= 2 && k >= r, "bound_l1 requires k >= r >= 2");
    return factorial(r) * binom(k, r) * std::pow(static_cast<double>(k), -r);
}

double bound_b1(int k, int r, double p, double edges) {
    require(r >= 2 && k >= r, "bound_b1 requires k >= r >= 2");
    require(p > 1.0, "bound_b1 requires p > 1");
    require(edges >= 0.0, "bound_b1 requires a nonnegative edge count");
    return factorial(r) * std::pow(binom(k, r), 1.0 / p) *
           std::pow(static_cast<double>(k), -static_cast<double>(r) / p) *
           std::pow(edges, 1.0 - 1.0 / p);
}

double bound_b2(int k, int r, double p, int n) {
    require(r >= 2 && k >= r, "bound_b2 requires k >= r >= 2");
    require(p > 1.0, "bound_b2 requires p > 1");
    require(n >= 1, "bound_b2 requires n >= 1");
    return bound_l1(k, r) * std::pow(static_cast<double>(n), r - static_cast<double>(r) / p);
}

double bound_b3(int k, int r, double p, double edges) {
    require(r >= 2 && k >= 2, "bound_b3 requires k >= 2 and r >= 2");
    require(p >= 1.0, "bound_b3 requires p >= 1");
    require(edges >= 0.0, "bound_b3 requires a nonnegative edge count");
    const double base = 1.0 - std::pow(static_cast<double>(k), 1 - r);
    return std::pow(base, 1.0 / p) * std::pow(factorial(r) * edges, 1.0 - 1.0 / p);
}

double bound_b4(int k, int r, double p, int n) {
    require(r >= 2 && k >= 2, "bound_b4 requires k >= 2 and r >= 2");
    require(p >= 1.0, "bound_b4 requires p >= 1");
    require(n >= 1, "bound_b4 requires n >= 1");
    const double base = 1.0 - std::pow(static_cast<double>(k), 1 - r);
    return base * std::pow(static_cast<double>(n), r - static_cast<double>(r) / p);
}

double bound_th4(int n, int k, double p) {
    require(k >= 2, "bound_th4 requires k >= 2");
    require(n >= 3, "bound_th4 requires n >= 3");
    require(p >= 1.0, "bound_th4 requires p >= 1");
    const double scale = 6.0 * std::pow(static_cast<double>(n), -3.0 / p);
    if (n <= 2 * k) return scale * binom(n, 3);
    return scale * (binom(n, 3) - k * real_binom(static_cast<double>(n) / k, 3));
}

double bound_pth4(int n, int r, double p) {
    require(r >= 2 && n >= r, "bound_pth4 requires n >= r >= 2");
    require(p >= 1.0, "bound_pth4 requires p >= 1");
    return factorial(r) * binom(n, r) * std::pow(static_cast<double>(n), -static_cast<double>(r) / p);
}

double bound_co2(int n, int k, int r, double p) {
    require(k >= 2 && r >= 2 && n >= r, "bound_co2 requires k >= 2 and n >= r >= 2");
    require(p >= 1.0, "bound_co2 requires p >= 1");
    const double inner = binom(n, r) - k * real_binom(static_cast<double>(n) / k, r);
    return factorial(r) * inner * std::pow(static_cast<double>(n), -static_cast<double>(r) / p);
}

double R_function(std::span<const double> n_vec, std::span<const double> a_vec) {
    if (n_vec.size() != a_vec.size()) throw std::invalid_argument("size/weight vectors must match");
    if (n_vec.size() < 2) throw std::invalid_argument("R_function needs at least two classes");
    const int k = static_cast<int>(n_vec.size());
    for (int i = 0; i < k; ++i) {
        if (n_vec[i] < 1.0) throw std::invalid_argument("R_function requires class sizes >= 1");
        if (!(a_vec[i] >= 0.0)) throw std::invalid_argument("R_function requires weights >= 0");
    }
    double total = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            total += real_binom(n_vec[i], 2) * n_vec[j] * a_vec[i] * a_vec[i] * a_vec[j] +
                     real_binom(n_vec[j], 2) * n_vec[i] * a_vec[j] * a_vec[j] * a_vec[i];
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int m = j + 1; m < k; ++m)
                total += n_vec[i] * n_vec[j] * n_vec[m] * a_vec[i] * a_vec[j] * a_vec[m];
    return total;
}

void R_gradient(std::span<const double> n_vec, std::span<const double> a_vec,
                std::span<double> dn_out, std::span<double> da_out) {
    const int k = static_cast<int>(n_vec.size());
    if (a_vec.size() != n_vec.size() || dn_out.size() != n_vec.size() ||
        da_out.size() != n_vec.size())
        throw std::invalid_argument("R_gradient spans must all have the same length");
    auto c2 = [](double x) { return 0.5 * x * (x - 1.0); };
    for (int t = 0; t < k; ++t) {
        double da = 0.0, dn = 0.0;
        for (int j = 0; j < k; ++j) {
            if (j == t) continue;
            da += 2.0 * c2(n_vec[t]) * n_vec[j] * a_vec[t] * a_vec[j] +
                  c2(n_vec[j]) * n_vec[t] * a_vec[j] * a_vec[j];
            dn += (n_vec[t] - 0.5) * n_vec[j] * a_vec[t] * a_vec[t] * a_vec[j] +
                  c2(n_vec[j]) * a_vec[j] * a_vec[j] * a_vec[t];
        }
        double pair_sum = 0.0;
        for (int i = 0; i < k; ++i) {
            if (i == t) continue;
            for (int j = i + 1; j < k; ++j) {
                if (j == t) continue;
                pair_sum += n_vec[i] * n_vec[j] * a_vec[i] * a_vec[j];
            }
        }
        da += n_vec[t] * pair_sum;
        dn += a_vec[t] * pair_sum;
        da_out[t] = da;
        dn_out[t] = dn;
    }
}

double R_bound(double n, int k, double s) {
    require(k >= 2, "R_bound requires k >= 2");
    require(n >= k, "R_bound requires n >= k");
    return (real_binom(n, 3) - k * real_binom(n / k, 3)) * s * s * s / (n * n * n);
}

std::uint64_t chromatic_edge_count(const PartitionSpec& spec, int r) {
    spec.validate();
    require(r >= 2, "uniformity r must be at least 2");
    const int n = spec.total();
    auto ibinom = [](std::int64_t n_, int r_) -> std::uint64_t {
        if (n_ < r_) return 0;
        std::uint64_t v = 1;
        for (int i = 0; i < r_; ++i) v = v * static_cast<std::uint64_t>(n_ - i) / (i + 1);
        return v;
    };
    std::uint64_t total = ibinom(n, r);
    for (int s : spec.sizes) total -= ibinom(s, r);
    return total;
}

std::uint64_t multipartite_edge_count(const PartitionSpec& spec, int r) {
    spec.validate();
    require(r >= 2, "uniformity r must be at least 2");
    if (spec.classes() < r) return 0;
    std::vector<std::uint64_t> e(static_cast<std::size_t>(r) + 1, 0);
    e[0] = 1;
    int seen = 0;
    for (int s : spec.sizes) {
        ++seen;
        for (int j = std::min(seen, r); j >= 1; --j)
            e[j] += static_cast<std::uint64_t>(s) * e[j - 1];
    }
    return e[r];
}

}  // namespace hyperlam
