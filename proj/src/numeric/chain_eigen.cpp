#include "qlat/numeric/chain_eigen.hpp"

#include "qlat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qlat::num {

namespace {

// Number of eigenvalues below x.
std::size_t sturm_count(const std::vector<double> &a, const std::vector<double> &b2, double x) {
    constexpr double tiny = std::numeric_limits<double>::min();
    std::size_t count = 0;
    double d = a[0] - x;
    if (d < 0)
        ++count;
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (d == 0)
            d = -tiny;
        d = (a[k] - x) - b2[k - 1] / d;
        if (d < 0)
            ++count;
    }
    return count;
}

} // namespace

std::vector<double> tridiagonal_eigenvalues(const std::vector<double> &a,
                                            const std::vector<double> &b) {
    const std::size_t n = a.size();
    if (n == 0)
        return {};
    if (b.size() + 1 != n)
        throw InvalidArgument("tridiagonal: off-diagonal must have n-1 entries");
    std::vector<double> b2(b.size());
    double bound = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double r = std::abs(a[k]);
        if (k > 0)
            r += std::abs(b[k - 1]);
        if (k + 1 < n)
            r += std::abs(b[k]);
        bound = std::max(bound, r);
    }
    for (std::size_t k = 0; k < b.size(); ++k)
        b2[k] = b[k] * b[k];
    bound = bound * (1 + 1e-12) + std::numeric_limits<double>::min();

    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lo = -bound, hi = bound;
        for (int it = 0; it < 2200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (sturm_count(a, b2, mid) > k)
                hi = mid;
            else
                lo = mid;
        }
        out[k] = 0.5 * (lo + hi);
    }
    return out;
}

std::vector<double> chain_eigenvalues(const CMat &h) {
    const Eigen::Index n = h.rows();
    std::vector<std::vector<Eigen::Index>> adj(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            if (h(i, j) != 0.0 || h(j, i) != 0.0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (const auto &a : adj)
        if (a.size() > 2)
            throw NumericalFailure("coupling pattern is not a union of paths");

    std::vector<bool> seen(n, false);
    std::vector<double> out;
    auto walk = [&](Eigen::Index start) {
        std::vector<double> diag, off;
        Eigen::Index prev = -1, cur = start;
        while (true) {
            seen[cur] = true;
            diag.push_back(h(cur, cur).real());
            Eigen::Index next = -1;
            for (auto v : adj[cur])
                if (v != prev && !seen[v])
                    next = v;
            if (next < 0)
                break;
            off.push_back(std::abs(h(cur, next)));
            prev = cur;
            cur = next;
        }
        const auto ev = tridiagonal_eigenvalues(diag, off);
        out.insert(out.end(), ev.begin(), ev.end());
    };
    for (Eigen::Index i = 0; i < n; ++i)
        if (!seen[i] && adj[i].size() <= 1)
            walk(i);
    for (Eigen::Index i = 0; i < n; ++i)
        if (!seen[i])
            throw NumericalFailure("coupling pattern contains a cycle");
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qlat::num
