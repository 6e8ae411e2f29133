#include "polyech/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyech {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::column(std::size_t j) const
{
    IntVector v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Integer& v = x(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) r(i, j) += v * y(k, j);
        }
    return r;
}

IntVector operator*(const IntMatrix& x, const IntVector& v)
{
    if (x.cols != v.size()) throw std::invalid_argument("matrix shape mismatch");
    IntVector r(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k)
            if (v[k] != 0 && x(i, k) != 0) r[i] += x(i, k) * v[k];
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
        os << "]\n";
    }
    return os;
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Integer& v)
{
    if (i >= rows || j >= cols) throw std::out_of_range("sparse matrix index");
    if (v == 0) return;
    auto [it, fresh] = entries.try_emplace({i, j}, v);
    if (fresh) return;
    it->second += v;
    if (it->second == 0) entries.erase(it);
}

Integer SparseIntMatrix::at(std::size_t i, std::size_t j) const
{
    auto it = entries.find({i, j});
    return it == entries.end() ? Integer(0) : it->second;
}

IntMatrix SparseIntMatrix::dense() const
{
    IntMatrix m(rows, cols);
    for (const auto& [ij, v] : entries) m(ij.first, ij.second) = v;
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m)
{
    SparseIntMatrix s(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (m(i, j) != 0) s.entries.emplace(std::pair{i, j}, m(i, j));
    return s;
}

SparseIntMatrix operator*(const SparseIntMatrix& x, const SparseIntMatrix& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    std::vector<std::vector<std::pair<std::size_t, const Integer*>>> yrows(y.rows);
    for (const auto& [ij, v] : y.entries) yrows[ij.first].push_back({ij.second, &v});
    SparseIntMatrix r(x.rows, y.cols);
    for (const auto& [ij, v] : x.entries)
        for (const auto& [j, w] : yrows[ij.second]) r.add(ij.first, j, v * *w);
    return r;
}

namespace {

class Eliminator {
public:
    Eliminator(IntMatrix& a, unsigned tr) : A(a), m(a.rows), n(a.cols), left(tr & SnfLeft), right(tr & SnfRight)
    {
        if (left) { U = IntMatrix::identity(m); Ui = U; }
        if (right) { V = IntMatrix::identity(n); Vi = V; }
    }

    // row i += q * row k
    void row_add(std::size_t i, std::size_t k, const Integer& q)
    {
        for (std::size_t j = 0; j < n; ++j)
            if (A(k, j) != 0) A(i, j) += q * A(k, j);
        if (left) {
            for (std::size_t j = 0; j < m; ++j) {
                if (U(k, j) != 0) U(i, j) += q * U(k, j);
                if (Ui(j, i) != 0) Ui(j, k) -= q * Ui(j, i);
            }
        }
    }

    // col j += q * col k
    void col_add(std::size_t j, std::size_t k, const Integer& q)
    {
        for (std::size_t i = 0; i < m; ++i)
            if (A(i, k) != 0) A(i, j) += q * A(i, k);
        if (right) {
            for (std::size_t i = 0; i < n; ++i) {
                if (V(i, k) != 0) V(i, j) += q * V(i, k);
                if (Vi(j, i) != 0) Vi(k, i) -= q * Vi(j, i);
            }
        }
    }

    void row_swap(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < n; ++j) swap(A(i, j), A(k, j));
        if (left)
            for (std::size_t j = 0; j < m; ++j) {
                swap(U(i, j), U(k, j));
                swap(Ui(j, i), Ui(j, k));
            }
    }

    void col_swap(std::size_t j, std::size_t k)
    {
        if (j == k) return;
        for (std::size_t i = 0; i < m; ++i) swap(A(i, j), A(i, k));
        if (right)
            for (std::size_t i = 0; i < n; ++i) {
                swap(V(i, j), V(i, k));
                swap(Vi(j, i), Vi(k, i));
            }
    }

    void row_negate(std::size_t i)
    {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = -A(i, j);
        if (left)
            for (std::size_t j = 0; j < m; ++j) {
                U(i, j) = -U(i, j);
                Ui(j, i) = -Ui(j, i);
            }
    }

    std::vector<Integer> run()
    {
        std::vector<Integer> d;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            if (!move_smallest(t)) break;
            while (true) {
                bool clear = true;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (A(i, t) == 0) continue;
                    Integer q = A(i, t) / A(t, t);
                    if (q != 0) row_add(i, t, -q);
                    if (A(i, t) != 0) clear = false;
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (A(t, j) == 0) continue;
                    Integer q = A(t, j) / A(t, t);
                    if (q != 0) col_add(j, t, -q);
                    if (A(t, j) != 0) clear = false;
                }
                if (!clear) {
                    pull_smaller_remainder(t);
                    continue;
                }
                auto bad = find_non_multiple(t);
                if (!bad) break;
                row_add(t, *bad, 1);
            }
            if (A(t, t) < 0) row_negate(t);
            d.push_back(A(t, t));
        }
        return d;
    }

    IntMatrix U, Ui, V, Vi;

private:
    static void swap(Integer& x, Integer& y) { mpz_swap(x.get_mpz_t(), y.get_mpz_t()); }
    static int cmpabs(const Integer& x, const Integer& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

    bool move_smallest(std::size_t t)
    {
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                if (bi == m || cmpabs(A(i, j), A(bi, bj)) < 0) { bi = i; bj = j; }
                if (abs(A(bi, bj)) == 1) goto found;
            }
        if (bi == m) return false;
    found:
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void pull_smaller_remainder(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
            if (A(i, t) != 0 && cmpabs(A(i, t), A(bi, bj)) < 0) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
            if (A(t, j) != 0 && cmpabs(A(t, j), A(bi, bj)) < 0) { bi = t; bj = j; }
        row_swap(t, bi);
        col_swap(t, bj);
    }

    // A row below t holding an entry not divisible by the pivot.
    std::optional<std::size_t> find_non_multiple(std::size_t t)
    {
        if (abs(A(t, t)) == 1) return std::nullopt;
        for (std::size_t i = t + 1; i < m; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (A(i, j) != 0 && !mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) return i;
        return std::nullopt;
    }

    IntMatrix& A;
    std::size_t m, n;
    bool left, right;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, unsigned transforms)
{
    Eliminator e(a, transforms);
    SmithForm f;
    f.divisors = e.run();
    f.U = std::move(e.U);
    f.U_inv = std::move(e.Ui);
    f.V = std::move(e.V);
    f.V_inv = std::move(e.Vi);
    return f;
}

SmithForm smith_normal_form(const SparseIntMatrix& m, unsigned transforms)
{
    return smith_normal_form(m.dense(), transforms);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows) throw std::invalid_argument("solve_integer: shape mismatch");
    SmithForm f = smith_normal_form(m, SnfBoth);
    IntVector c = f.U * b;
    IntVector y(m.cols);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < f.rank()) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), f.divisors[i].get_mpz_t())) return std::nullopt;
            y[i] = c[i] / f.divisors[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return f.V * y;
}

}  // namespace polyech
