#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ringforge::linalg {

using Int = std::int64_t;
using Row = std::vector<Int>;
using Mat = std::vector<Row>;

// Row-style Hermite normal form of the lattice spanned by `rows` in Z^cols.
// Callers always include the coordinate-order rows d_i*e_i, so the lattice has
// full column rank and the result is a square upper-triangular matrix with
// positive pivots H[i][i] and 0 <= H[j][i] < H[i][i] for j < i. Deterministic.
Mat hnf(Mat rows, int cols);

// Echelonization with left-transform tracking: u * input = h.
// Rows of u beyond `rank` form a basis of the integer left kernel.
struct HnfTransform {
    Mat h;
    Mat u;
    int rank = 0;
};
HnfTransform hnf_transform(Mat rows, int cols);

// Membership of x in the row lattice of a full-rank square HNF matrix.
bool lattice_contains(const Mat& h, const Row& x);

// Integer coefficients y with y * h = x, or nullopt if x is not in the lattice.
std::optional<Row> lattice_coords(const Mat& h, const Row& x);

// Diagonalization over Z with transforms: u * a * v = diag(d), u and v
// unimodular, d nonnegative. The divisibility chain of full Smith form is not
// enforced; quotient construction only needs some diagonal form. vinv is
// maintained alongside v so callers get sections for free.
struct Snf {
    std::vector<Int> diag;
    Mat u, v, vinv;
};
Snf smith(Mat a);

Int checked_mul(Int a, Int b);  // throws InvariantViolation on int64 overflow

}  // namespace ringforge::linalg
