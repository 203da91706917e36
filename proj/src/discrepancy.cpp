#include "rhalton/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rhalton {

double local_discrepancy(const PointMatrix& points, std::span<const double> anchor)
{
    if (anchor.size() != points.cols())
        throw std::invalid_argument("local_discrepancy: anchor dimension does not match the points");
    if (points.rows() == 0)
        throw std::invalid_argument("local_discrepancy: empty point set");
    std::size_t inside = 0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
        const auto x = points.row(i);
        bool in = true;
        for (std::size_t j = 0; j < x.size() && in; ++j)
            in = x[j] <= anchor[j];
        inside += in ? 1 : 0;
    }
    double volume = 1.0;
    for (const double a : anchor)
        volume *= a;
    return static_cast<double>(inside) / static_cast<double>(points.rows()) - volume;
}

double star_discrepancy_1d(std::vector<double> values)
{
    if (values.empty())
        throw std::invalid_argument("star_discrepancy_1d: empty point set");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        worst = std::max(worst, static_cast<double>(i + 1) / n - x);
        worst = std::max(worst, x - static_cast<double>(i) / n);
    }
    return worst;
}

double star_discrepancy_bruteforce(const PointMatrix& points)
{
    const std::size_t n = points.rows();
    const std::size_t d = points.cols();
    if (n == 0 || d == 0)
        throw std::invalid_argument("star_discrepancy_bruteforce: empty point set");
    if (d > kBruteForceMaxDim || n > kBruteForceMaxPoints)
        throw std::invalid_argument("star_discrepancy_bruteforce: limited to d <= 3 and n <= 512 (got d = " +
                                    std::to_string(d) + ", n = " + std::to_string(n) +
                                    "); use star_discrepancy_1d for one-dimensional sets");

    std::vector<std::vector<double>> grid(d);
    for (std::size_t j = 0; j < d; ++j) {
        auto& g = grid[j];
        for (std::size_t i = 0; i < n; ++i)
            g.push_back(points(i, j));
        g.push_back(1.0);
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }

    const double nd = static_cast<double>(n);
    std::vector<std::size_t> pos(d, 0);
    std::vector<double> anchor(d);
    double worst = 0.0;
    for (;;) {
        double volume = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            anchor[j] = grid[j][pos[j]];
            volume *= anchor[j];
        }
        std::size_t closed = 0;
        std::size_t open = 0;
        for (std::size_t i = 0; i < n; ++i) {
            bool le = true;
            bool lt = true;
            for (std::size_t j = 0; j < d; ++j) {
                const double x = points(i, j);
                le = le && x <= anchor[j];
                lt = lt && x < anchor[j];
            }
            closed += le ? 1 : 0;
            open += lt ? 1 : 0;
        }
        worst = std::max(worst, static_cast<double>(closed) / nd - volume);
        worst = std::max(worst, volume - static_cast<double>(open) / nd);

        std::size_t j = 0;
        while (j < d && ++pos[j] == grid[j].size()) {
            pos[j] = 0;
            ++j;
        }
        if (j == d)
            break;
    }
    return worst;
}

}  // namespace rhalton
