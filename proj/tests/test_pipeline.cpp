#include "zmds/mds.hpp"
#include "zmds/metrics.hpp"
#include "zmds/zeros.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

using namespace zmds;

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxy += (x[k] - mx) * (y[k] - my);
        sxx += (x[k] - mx) * (x[k] - mx);
        syy += (y[k] - my) * (y[k] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

TEST_CASE("Lorentzian windows of the first 10000 zeros") {
    const auto zeros = load_zeros(std::string(ZMDS_DATA) + "/zeta_zeros_10000.txt");
    REQUIRE(zeros.size() == 10000);
    const auto d = distance_matrix(make_windows(zeros, 10, Approach::A1, 1000), Metric::Lorentzian);
    const auto e = embed(d, 3);

    SUBCASE("Shepard cloud at n = 3 is tight") {
        const auto pairs = shepard_points(d, e);
        std::vector<double> a, b;
        for (const auto& [x, y] : pairs) {
            a.push_back(x);
            b.push_back(y);
        }
        const double r = pearson(a, b);
        MESSAGE("Shepard correlation at n = 3: " << r);
        CHECK(r >= 0.9);
        CHECK(std::all_of(b.begin(), b.end(), [](double v) { return v >= 0.0; }));
    }
    SUBCASE("stress curve never increases") {
        const auto curve = stress_curve(d, 30);
        REQUIRE(curve.size() == 30);
        for (std::size_t k = 1; k < curve.size(); ++k)
            CHECK(curve[k].second <= curve[k - 1].second + 1e-12);
        CHECK(curve.back().second < curve.front().second);
    }
    SUBCASE("no negative eigenvalues") {
        CHECK(e.negative_count() == 0);
    }
}
