#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vkh/errors.hpp"
#include "vkh/linalg.hpp"

using namespace vkh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (static_cast<int>(rng() % 100) < density) m.add(r, c, static_cast<long>(rng() % 11) - 5);
    return m;
}

// Sparse M x with integer x.
std::vector<mpz_class> times(const IntMatrix& m, const std::vector<mpz_class>& x) {
    std::vector<mpz_class> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& e : m.row(r)) out[r] += e.value * x[e.index];
    return out;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank examples") {
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix::from_dense({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(IntMatrix::from_dense({{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(IntMatrix::from_dense({{1, 0}, {0, 1}})).empty());
    CHECK(kernel_basis(IntMatrix(2, 2)).size() == 2);
    auto k = kernel_basis(IntMatrix::from_dense({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(abs(k[0][0]) == 1);
}

TEST_CASE("sparse storage drops cancelled entries") {
    IntMatrix m(2, 2);
    m.add(0, 1, 3);
    m.add(0, 1, -3);
    CHECK(m.is_zero());
    m.add(1, 0, 2);
    CHECK(m.at(1, 0) == 2);
    CHECK(m.transpose().at(0, 1) == 2);
}

TEST_CASE("multiply") {
    IntMatrix a = IntMatrix::from_dense({{1, 2}, {0, 1}});
    IntMatrix b = IntMatrix::from_dense({{3}, {4}});
    IntMatrix p = multiply(a, b);
    CHECK(p.at(0, 0) == 11);
    CHECK(p.at(1, 0) == 4);
}

TEST_CASE("rank and kernel match naive rational elimination") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 400; ++i) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        IntMatrix m = random_matrix(rng, rows, cols, 20 + static_cast<int>(rng() % 70));
        // Force some dependent rows.
        if (rows > 2 && rng() % 2)
            for (const auto& e : m.row(0)) m.add(rows - 1, e.index, e.value * 3);
        std::size_t r = rank(m);
        REQUIRE(r == oracle::naive_rank(oracle::to_dense(m)));
        auto k = kernel_basis(m);
        CHECK(r + k.size() == cols);
        for (const auto& v : k) {
            for (const auto& x : times(m, v)) CHECK(x == 0);
            mpz_class g = 0;
            for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("rank survives large entries") {
    // Hilbert-like integer matrix scaled to keep it full rank with big pivots.
    std::vector<std::vector<long>> rows(7, std::vector<long>(7));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) rows[i][j] = 5040 / (i + j + 1);
    IntMatrix m = IntMatrix::from_dense(rows);
    CHECK(rank(m) == oracle::naive_rank(oracle::to_dense(m)));
}

TEST_CASE("filtered image dims: zero differential") {
    FilteredComplex c;
    c.min_degree = 0;
    c.levels = {{1, 1, -1}};
    auto dims = filtered_image_dims(c, 0);
    CHECK(dims.at(1) == 2);
    CHECK(dims.at(-1) == 3);
    CHECK(dims.at(2) == 0);
}

TEST_CASE("filtered image dims: cancelling pair") {
    // x (level 0) -> y (level 2); z (level 4) is a cycle.
    FilteredComplex c;
    c.min_degree = -1;
    c.levels = {{0}, {2, 4}};
    IntMatrix d(2, 1);
    d.add(0, 0, 1);
    c.differentials.push_back(d);
    auto dims = filtered_image_dims(c, 0);
    CHECK(dims.at(4) == 1);
    CHECK(dims.at(5) == 0);
    CHECK(dims.at(2) == 1);
    CHECK(filtered_image_dims(c, -1).at(0) == 0);
}

TEST_CASE("filtration violation") {
    FilteredComplex c;
    c.min_degree = 0;
    c.levels = {{4}, {0}};
    IntMatrix d(1, 1);
    d.add(0, 0, 1);
    c.differentials.push_back(d);
    try {
        check_filtration(c);
        FAIL("expected a filtration violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::filtration_violation);
    }
}

TEST_CASE("filtered image dims match the naive oracle on random two-term complexes") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        FilteredComplex c;
        c.min_degree = static_cast<int>(rng() % 3) - 1;
        std::size_t a = 1 + rng() % 6, b = 1 + rng() % 6;
        std::vector<int> la(a), lb(b);
        for (auto& l : la) l = 2 * (static_cast<int>(rng() % 5) - 2);
        for (auto& l : lb) l = 2 * (static_cast<int>(rng() % 5) - 2);
        IntMatrix d(b, a);
        for (std::size_t r = 0; r < b; ++r)
            for (std::size_t col = 0; col < a; ++col)
                if (lb[r] >= la[col] && rng() % 3 == 0) d.add(r, col, static_cast<long>(rng() % 5) - 2);
        c.levels = {la, lb};
        c.differentials.push_back(d);
        check_filtration(c);
        auto all = filtered_image_dims_all(c);
        for (int h = c.min_degree; h <= c.max_degree(); ++h) {
            auto expect = oracle::naive_filtered_dims(c, h);
            REQUIRE(filtered_image_dims(c, h) == expect);
            REQUIRE(all.at(h) == expect);
        }
    }
}

}
