#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "combgas/builders.hpp"
#include "combgas/simd.hpp"

using namespace combgas;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

// plain loops, independent of both kernel tables
double ref_dot(const std::vector<double>& x, const std::vector<double>& y) {
    long double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (long double)x[i] * y[i];
    return double(s);
}

}  // namespace

TEST_CASE("scalar kernels agree with plain loops") {
    std::mt19937 rng(7);
    const auto& k = simd::scalar_kernels();
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 100u}) {
        auto x = random_vec(rng, n, -1, 1), y = random_vec(rng, n, -1, 1);
        CHECK(k.dot(x.data(), y.data(), n) == doctest::Approx(ref_dot(x, y)).epsilon(1e-13));
        auto z = y;
        k.axpy(0.5, x.data(), z.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(z[i] == doctest::Approx(y[i] + 0.5 * x[i]));
        auto w = random_vec(rng, n, 0.5, 2), c = random_vec(rng, n, 0, 2);
        double r = 0;
        for (std::size_t i = 0; i < n; ++i) r += w[i] / (0.3 + c[i]);
        CHECK(k.recip_sum(w.data(), c.data(), 0.3, n) == doctest::Approx(r).epsilon(1e-13));
    }
}

TEST_CASE("vector kernels match the scalar reference") {
    const auto* v = simd::avx2_kernels();
    if (!v) {
        MESSAGE("AVX2/FMA not available on this machine; only the scalar table is exercised");
        return;
    }
    const auto& s = simd::scalar_kernels();
    std::mt19937 rng(11);
    for (std::size_t n = 0; n < 70; ++n) {
        auto x = random_vec(rng, n, -1, 1), y = random_vec(rng, n, -1, 1);
        CHECK(v->dot(x.data(), y.data(), n) == doctest::Approx(s.dot(x.data(), y.data(), n)).epsilon(1e-13).scale(1));

        auto y1 = y, y2 = y;
        s.axpy(-1.25, x.data(), y1.data(), n);
        v->axpy(-1.25, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-15));

        auto w = random_vec(rng, n, 0, 2), c = random_vec(rng, n, 0, 3), u = random_vec(rng, n, -1, 1),
             vv = random_vec(rng, n, -1, 1);
        CHECK(v->recip_sum(w.data(), c.data(), 1e-3, n) ==
              doctest::Approx(s.recip_sum(w.data(), c.data(), 1e-3, n)).epsilon(1e-13));
        CHECK(v->q_row(w.data(), c.data(), u.data(), vv.data(), 0.2, 0.7, 0.9, n) ==
              doctest::Approx(s.q_row(w.data(), c.data(), u.data(), vv.data(), 0.2, 0.7, 0.9, n)).epsilon(1e-13).scale(1));
    }
}

TEST_CASE("vector spmv matches scalar spmv on graph CSR") {
    const auto* v = simd::avx2_kernels();
    if (!v) return;
    const auto& s = simd::scalar_kernels();
    std::mt19937 rng(3);
    for (const Graph& g : {build_chain(9), build_lattice_box(2, 4, Boundary::periodic), build_ladder(5),
                           comb_product(build_lattice_box(2, 3, Boundary::free), build_chain(3), 3)}) {
        const std::size_t n = g.vertex_count();
        auto x = random_vec(rng, n, -1, 1);
        std::vector<double> y1(n), y2(n);
        s.spmv(n, g.offsets().data(), g.targets().data(), g.values().data(), x.data(), y1.data());
        v->spmv(n, g.offsets().data(), g.targets().data(), g.values().data(), x.data(), y2.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(y2[i] == doctest::Approx(y1[i]).epsilon(1e-14));
        // and both against the dense adjacency
        Eigen::VectorXd ex = g.dense_adjacency() * Eigen::Map<Eigen::VectorXd>(x.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(ex[i]).epsilon(1e-14));
    }
}

TEST_CASE("dispatcher picks a known table") {
    const std::string name = simd::active().name;
    CHECK((name == simd::scalar_kernels().name || (simd::avx2_kernels() && name == simd::avx2_kernels()->name)));
}
