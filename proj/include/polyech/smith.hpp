#pragma once
// Exact integer matrices and Smith normal form over arbitrary-precision integers.
#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace polyech {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> a;  // row major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static IntMatrix identity(std::size_t n);

    Integer& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    IntVector column(std::size_t j) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntVector operator*(const IntMatrix& x, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SparseIntMatrix {
    std::size_t rows = 0, cols = 0;
    std::map<std::pair<std::size_t, std::size_t>, Integer> entries;  // no zeros

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c) {}
    void add(std::size_t i, std::size_t j, const Integer& v);
    Integer at(std::size_t i, std::size_t j) const;
    std::size_t nnz() const { return entries.size(); }
    IntMatrix dense() const;
    static SparseIntMatrix from_dense(const IntMatrix& m);
};

SparseIntMatrix operator*(const SparseIntMatrix& x, const SparseIntMatrix& y);

struct SmithForm {
    std::vector<Integer> divisors;  // positive, each divides the next
    // U * M * V is M's shape with the divisors on the diagonal.
    IntMatrix U, V;
    IntMatrix U_inv, V_inv;
    std::size_t rank() const { return divisors.size(); }
};

enum SmithTransforms : unsigned {
    SnfNone = 0,
    SnfLeft = 1,     // U and U_inv
    SnfRight = 2,    // V and V_inv
    SnfBoth = 3,
};

SmithForm smith_normal_form(IntMatrix m, unsigned transforms = SnfBoth);
SmithForm smith_normal_form(const SparseIntMatrix& m, unsigned transforms = SnfBoth);

// An integer solution of M x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

}  // namespace polyech
