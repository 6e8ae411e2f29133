#include <random>

#include "doctest.h"
#include "polyech/smith.hpp"
#include "snf_oracle.hpp"

using namespace polyech;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    return m;
}

oracle::BigMatrix to_oracle(const IntMatrix& m)
{
    oracle::BigMatrix b(m.rows, std::vector<mpz_class>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) b[i][j] = m(i, j);
    return b;
}

IntMatrix random_matrix(std::mt19937_64& rng, int t)
{
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    std::size_t r = dim(rng), c = dim(rng);
    IntMatrix m(r, c);
    if (t % 4 == 3 && r > 1 && c > 1) {
        // Low rank with shared factors, so that torsion shows up.
        std::size_t k = 1 + rng() % std::min<std::size_t>(3, std::min(r, c) - 1);
        IntMatrix a(r, k), b(k, c);
        for (auto& v : a.a) v = entry(rng) % 4;
        for (auto& v : b.a) v = 2 * (entry(rng) % 3);
        return a * b;
    }
    for (auto& v : m.a) v = entry(rng);
    return m;
}

IntMatrix diagonal_of(std::size_t r, std::size_t c, const std::vector<Integer>& d)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

}  // namespace

TEST_CASE("small Smith forms")
{
    CHECK(smith_normal_form(IntMatrix::identity(3)).divisors == std::vector<Integer>{1, 1, 1});
    CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})).divisors == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(from_rows({{2, 4}, {6, 8}})).divisors == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix(2, 3)).divisors.empty());
    CHECK(smith_normal_form(IntMatrix(0, 4)).divisors.empty());
}

TEST_CASE("divisors agree with the elimination oracle on random matrices")
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 500; ++t) {
        IntMatrix m = random_matrix(rng, t);
        SmithForm f = smith_normal_form(m);
        CHECK(f.divisors == oracle::invariant_factors(to_oracle(m)));
        for (std::size_t i = 0; i + 1 < f.rank(); ++i) {
            CHECK(f.divisors[i] > 0);
            CHECK(mpz_divisible_p(f.divisors[i + 1].get_mpz_t(), f.divisors[i].get_mpz_t()));
        }
        CHECK(f.U * m * f.V == diagonal_of(m.rows, m.cols, f.divisors));
        CHECK(f.U * f.U_inv == IntMatrix::identity(m.rows));
        CHECK(f.V * f.V_inv == IntMatrix::identity(m.cols));
        if (m.rows <= 4 && m.cols <= 4) {
            auto dk = oracle::determinantal_divisors(to_oracle(m));
            REQUIRE(dk.size() == f.rank());
            Integer prod = 1;
            for (std::size_t k = 0; k < dk.size(); ++k) {
                prod *= f.divisors[k];
                CHECK(prod == dk[k]);
            }
        }
    }
}

TEST_CASE("integer solutions")
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_matrix(rng, t);
        IntVector x(m.cols);
        for (auto& v : x) v = entry(rng);
        IntVector b = m * x;
        auto y = solve_integer(m, b);
        REQUIRE(y);
        CHECK(m * *y == b);
    }
    // 2x = 1 has no integer solution; 2x = 4 does.
    IntMatrix two = from_rows({{2}});
    CHECK(!solve_integer(two, {Integer(1)}));
    CHECK(solve_integer(two, {Integer(4)}) == IntVector{Integer(2)});
    CHECK(!solve_integer(from_rows({{1, 1}, {1, 1}}), {Integer(1), Integer(0)}));
}

TEST_CASE("sparse matrices")
{
    SparseIntMatrix s(2, 3);
    s.add(0, 1, 3);
    s.add(0, 1, -3);
    s.add(1, 2, 5);
    CHECK(s.nnz() == 1);
    CHECK(s.at(1, 2) == 5);
    CHECK(SparseIntMatrix::from_dense(s.dense()).entries == s.entries);
    SparseIntMatrix t(3, 1);
    t.add(2, 0, 2);
    CHECK((s * t).at(1, 0) == 10);
    CHECK(smith_normal_form(s).divisors == std::vector<Integer>{5});
}
