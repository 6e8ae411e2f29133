#pragma once
// Reference invariant factors, computed without any code from the library.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace oracle {

using Big = mpz_class;
using BigMatrix = std::vector<std::vector<Big>>;

// Diagonalize with Bezout row and column steps, then normalize the diagonal
// pairwise to (gcd, lcm).
inline std::vector<Big> invariant_factors(BigMatrix a)
{
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<Big> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Find any nonzero entry in the lower-right block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m && pi == m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == m) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                if (mpz_divisible_p(a[i][t].get_mpz_t(), a[t][t].get_mpz_t())) {
                    Big q = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                    continue;
                }
                Big g, s, r;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), a[t][t].get_mpz_t(), a[i][t].get_mpz_t());
                Big u = a[t][t] / g, v = a[i][t] / g;
                for (std::size_t j = t; j < n; ++j) {
                    Big x = a[t][j], y = a[i][j];
                    a[t][j] = s * x + r * y;
                    a[i][j] = -v * x + u * y;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                if (mpz_divisible_p(a[t][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                    Big q = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                    continue;
                }
                Big g, s, r;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), a[t][t].get_mpz_t(), a[t][j].get_mpz_t());
                Big u = a[t][t] / g, v = a[t][j] / g;
                for (std::size_t i = t; i < m; ++i) {
                    Big x = a[i][t], y = a[i][j];
                    a[i][t] = s * x + r * y;
                    a[i][j] = -v * x + u * y;
                }
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a[i][t] != 0) dirty = true;
            }
        }
        diag.push_back(abs(a[t][t]));
    }
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Big g = gcd(diag[i], diag[j]);
            Big l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

inline Big determinant(BigMatrix a)
{
    std::size_t n = a.size();
    Big det = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) { std::swap(a[p], a[k]); det = -det; }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return det * a[n - 1][n - 1];
}

// gcd of all k x k minors, for every k up to the rank.
inline std::vector<Big> determinantal_divisors(const BigMatrix& a)
{
    std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<Big> out;
    for (std::size_t k = 1; k <= std::min(m, n); ++k) {
        Big g = 0;
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                BigMatrix sub;
                for (std::size_t i = 0; i < m; ++i) {
                    if (!rs[i]) continue;
                    sub.emplace_back();
                    for (std::size_t j = 0; j < n; ++j)
                        if (cs[j]) sub.back().push_back(a[i][j]);
                }
                g = gcd(g, determinant(sub));
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
        if (g == 0) break;
        out.push_back(g);
    }
    return out;
}

}  // namespace oracle
