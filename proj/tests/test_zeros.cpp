#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "support.hpp"
#include "triplecorr/zerofinder.hpp"
#include "triplecorr/zeros.hpp"

using namespace triplecorr;

namespace {

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    out << body;
}

}  // namespace

TEST_CASE("load_zeros parses a standard zero table prefix") {
    write_file("zt_ok.txt",
               "# test table\n14.134725141734694\n21.022039638771555\n"
               "25.010857580145689\n");
    const auto ds = load_zeros("zt_ok.txt");
    REQUIRE(ds.count == 3);
    for (int k = 0; k < 3; ++k)
        CHECK(ds.ordinates[std::size_t(k)] ==
              doctest::Approx(testsupport::kFirstZeros[std::size_t(k)]).epsilon(1e-12));
    CHECK(ds.T == doctest::Approx(25.010857580145689));
    CHECK(ds.input_was_sorted);
}

TEST_CASE("load_zeros rejects bad input") {
    write_file("zt_neg.txt", "14.1\n-3.0\n");
    CHECK_THROWS_AS(load_zeros("zt_neg.txt"), ParseError);
    write_file("zt_dup.txt", "14.1\n14.1\n21.0\n");
    CHECK_THROWS_AS(load_zeros("zt_dup.txt"), ParseError);
    write_file("zt_garbage.txt", "14.1\nhello\n");
    CHECK_THROWS_AS(load_zeros("zt_garbage.txt"), ParseError);
    write_file("zt_empty.txt", "# only comments\n\n");
    CHECK_THROWS_AS(load_zeros("zt_empty.txt"), EmptyFile);
    CHECK_THROWS_AS(load_zeros("zt_missing_file.txt"), ParseError);

    write_file("zt_unsorted.txt", "21.0\n14.1\n25.0\n");
    const auto ds = load_zeros("zt_unsorted.txt");
    CHECK_FALSE(ds.input_was_sorted);
    CHECK(ds.ordinates[0] == doctest::Approx(14.1));
}

TEST_CASE("a truncated table still yields a valid tiny histogram") {
    write_file("zt_tiny.txt",
               "14.134725\n21.022040\n25.010858\n30.424876\n32.935062\n"
               "37.586178\n40.918719\n43.327073\n48.005151\n49.773832\n");
    const auto ds = load_zeros("zt_tiny.txt");
    const auto h = empirical_two_point(ds, 10.0, 1.0);
    std::int64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total > 0);
    CHECK(h.counts.size() == 10);
    const auto h2 = empirical_triple(ds, 10.0, 2.0, 1);
    CHECK(h2.n == 5);
}

TEST_CASE("zero finder reproduces the published low zeros") {
    const auto zeros = first_zeros(10);
    REQUIRE(zeros.size() == 10);
    for (std::size_t k = 0; k < 10; ++k)
        CHECK(std::abs(zeros[k] - testsupport::kFirstZeros[k]) < 1e-6);
}

TEST_CASE("Riemann-Siegel and Euler-Maclaurin branches of Z agree") {
    const HardyZ Z(2100.0);
    // compare the Riemann-Siegel value just above the crossover with the
    // Euler-Maclaurin value computed below it (the EM branch is exact)
    const HardyZ Zem(2100.0);
    for (double t : {420.0, 900.0, 1700.0}) {
        const double zrs = Z(t);
        // Euler-Maclaurin reference through the zeta module
        EulerMaclaurinParams em;
        const Cx zv = zeta(Cx(0.5, t), em);
        const double th = riemann_siegel_theta(t);
        const double zem = (Cx(std::cos(th), std::sin(th)) * zv).real();
        CHECK(std::abs(zrs - zem) < 5e-3);
    }
}

TEST_CASE("pair counting matches a brute-force double loop") {
    const auto ds = testsupport::cached_zeros(1000);
    const double window = 10.0, bin = 0.5;
    const auto h = empirical_two_point(ds, window, bin);

    std::vector<std::int64_t> brute(h.counts.size(), 0);
    for (std::size_t i = 0; i < ds.count; ++i)
        for (std::size_t j = 0; j < ds.count; ++j) {
            if (i == j) continue;
            const double d = ds.ordinates[i] - ds.ordinates[j];
            if (d <= 0.0 || d > h.window) continue;
            ++brute[std::min(brute.size() - 1, std::size_t(d / bin))];
        }
    REQUIRE(h.counts.size() == brute.size());
    for (std::size_t k = 0; k < brute.size(); ++k) CHECK(h.counts[k] == brute[k]);
}

TEST_CASE("triple counting matches a brute-force triple loop") {
    const auto ds = testsupport::cached_zeros(300);
    const double window = 8.0, bin = 1.0;
    const auto h = empirical_triple(ds, window, bin);

    std::vector<std::int64_t> brute(h.counts.size(), 0);
    for (std::size_t i = 0; i < ds.count; ++i)
        for (std::size_t j = 0; j < ds.count; ++j)
            for (std::size_t k = 0; k < ds.count; ++k) {
                if (i == j || i == k || j == k) continue;
                const double d1 = ds.ordinates[i] - ds.ordinates[j];
                const double d2 = ds.ordinates[i] - ds.ordinates[k];
                if (d1 <= 0.0 || d1 > h.window || d2 <= 0.0 || d2 > h.window) continue;
                ++brute[std::size_t(d1 / bin) * h.n + std::size_t(d2 / bin)];
            }
    REQUIRE(h.counts.size() == brute.size());
    for (std::size_t k = 0; k < brute.size(); ++k) CHECK(h.counts[k] == brute[k]);

    // deterministic under threading
    const auto h4 = empirical_triple(ds, window, bin, 4);
    CHECK(h4.counts == h.counts);
}

TEST_CASE("histogram counts are invariant under input permutation") {
    const auto ds = testsupport::cached_zeros(300);
    std::vector<double> shuffled = ds.ordinates;
    std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(57));
    std::ofstream out("zt_shuffled.txt");
    out.precision(17);
    for (double z : shuffled) out << z << "\n";
    out.close();
    const auto ds2 = load_zeros("zt_shuffled.txt");
    CHECK_FALSE(ds2.input_was_sorted);
    const auto a = empirical_two_point(ds, 10.0, 0.5);
    const auto b = empirical_two_point(ds2, 10.0, 0.5);
    CHECK(a.counts == b.counts);
}

TEST_CASE("two-point histogram dips at the first zero ordinate") {
    const auto ds = testsupport::cached_zeros(10000);
    const auto h = empirical_two_point(ds, 20.0, 0.2);
    // bin containing separation 14.13 vs the mean of its neighborhood
    const std::size_t k0 = std::size_t(14.1347 / 0.2);
    double nbhd = 0.0;
    int cnt = 0;
    for (std::size_t k = k0 - 5; k <= k0 + 5; ++k) {
        if (k == k0 || k == k0 - 1 || k == k0 + 1) continue;
        nbhd += h.normalized[k];
        ++cnt;
    }
    nbhd /= cnt;
    CHECK(h.normalized[k0] < 0.85 * nbhd);

    // envelope: normalized values settle near the density plateau at large
    // separation (between 0.5 and 1.5 averaged over 20 bins)
    double avg = 0.0;
    for (std::size_t k = h.counts.size() - 20; k < h.counts.size(); ++k)
        avg += h.normalized[k];
    avg /= 20.0;
    CHECK(avg > 0.5);
    CHECK(avg < 1.5);
}

TEST_CASE("triple histogram: window edge cases and diagonal depletion") {
    const auto ds = testsupport::cached_zeros(2000);
    // window below the first gap with bin = window: nothing lands
    const auto tiny = empirical_two_point(ds, 1e-3, 1e-3);
    std::int64_t total = 0;
    for (auto c : tiny.counts) total += c;
    CHECK(total == 0);
    CHECK_THROWS_AS(empirical_two_point(ds, 0.5, 0.7), DomainError);

    const auto h = empirical_triple(ds, 12.0, 0.4, 1);
    // diagonal cells (v1 == v2 within one bin) depressed by level repulsion
    double diag = 0.0, off = 0.0;
    int ndiag = 0, noff = 0;
    for (std::size_t i = 5; i < h.n; ++i) {
        diag += h.normalized[i * h.n + i];
        ++ndiag;
        if (i + 3 < h.n) {
            off += h.normalized[i * h.n + (i + 3)];
            ++noff;
        }
    }
    CHECK(diag / ndiag < 0.5 * (off / noff));
}

TEST_CASE("diff_stats: zeros, antisymmetry, mismatches") {
    const auto ds = testsupport::cached_zeros(2000);
    const auto h = empirical_triple(ds, 10.0, 0.5, 1);
    const auto g = to_grid(h, 0.5);

    const auto zero = diff_stats(g, g);
    CHECK(zero.mean == 0.0);
    CHECK(zero.stddev == 0.0);
    CHECK(zero.mean_abs == 0.0);
    CHECK(zero.max_abs == 0.0);
    CHECK(zero.cells > 0);

    auto g2 = g;
    for (auto& v : g2.values) v *= 1.1;
    const auto ab = diff_stats(g, g2);
    const auto ba = diff_stats(g2, g);
    CHECK(ab.mean == doctest::Approx(-ba.mean).epsilon(1e-14));
    CHECK(ab.max_abs == doctest::Approx(ba.max_abs).epsilon(1e-14));

    auto g3 = g;
    g3.v1_axis[0] += 0.01;
    CHECK_THROWS_AS(diff_stats(g, g3), GridMismatch);
    auto g4 = g;
    g4.mask[0] ^= 1;
    CHECK_THROWS_AS(diff_stats(g, g4), GridMismatch);
}
