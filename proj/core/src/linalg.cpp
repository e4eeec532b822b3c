#include "ringforge/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "ringforge/errors.hpp"

namespace ringforge::linalg {

Int checked_mul(Int a, Int b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN)
        throw InvariantViolation("int64 overflow in exact linear algebra");
    return static_cast<Int>(p);
}

namespace {

void row_submul(Row& target, const Row& src, Int q) {
    for (size_t c = 0; c < target.size(); ++c)
        target[c] -= checked_mul(q, src[c]);
}

Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Shared echelonization. When `track` is non-null it receives the same row
// operations, starting from the identity.
int echelonize(Mat& b, int cols, Mat* track) {
    const int m = static_cast<int>(b.size());
    int r = 0;
    for (int c = 0; c < cols && r < m; ++c) {
        // Euclidean elimination in column c over rows r..m-1.
        for (;;) {
            int best = -1;
            for (int i = r; i < m; ++i)
                if (b[i][c] != 0 && (best < 0 || std::llabs(b[i][c]) < std::llabs(b[best][c])))
                    best = i;
            if (best < 0) break;
            if (best != r) {
                std::swap(b[best], b[r]);
                if (track) std::swap((*track)[best], (*track)[r]);
            }
            if (b[r][c] < 0) {
                for (auto& v : b[r]) v = -v;
                if (track)
                    for (auto& v : (*track)[r]) v = -v;
            }
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (b[i][c] == 0) continue;
                Int q = b[i][c] / b[r][c];
                if (q != 0) {
                    row_submul(b[i], b[r], q);
                    if (track) row_submul((*track)[i], (*track)[r], q);
                }
                if (b[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (b[r][c] != 0) {
            // Reduce the entries above the pivot into [0, pivot).
            for (int i = 0; i < r; ++i) {
                Int q = floor_div(b[i][c], b[r][c]);
                if (q != 0) {
                    row_submul(b[i], b[r], q);
                    if (track) row_submul((*track)[i], (*track)[r], q);
                }
            }
            ++r;
        }
    }
    return r;
}

}  // namespace

Mat hnf(Mat rows, int cols) {
    for (auto& row : rows)
        if (static_cast<int>(row.size()) != cols)
            throw InvariantViolation("hnf: inconsistent row width");
    int rank = echelonize(rows, cols, nullptr);
    if (rank != cols)
        throw InvariantViolation("hnf: lattice does not have full column rank");
    rows.resize(cols);
    return rows;
}

HnfTransform hnf_transform(Mat rows, int cols) {
    const int m = static_cast<int>(rows.size());
    Mat u(m, Row(m, 0));
    for (int i = 0; i < m; ++i) u[i][i] = 1;
    HnfTransform out;
    out.rank = echelonize(rows, cols, &u);
    out.h = std::move(rows);
    out.u = std::move(u);
    return out;
}

std::optional<Row> lattice_coords(const Mat& h, const Row& x) {
    const int k = static_cast<int>(h.size());
    Row rem = x, y(k, 0);
    for (int c = 0; c < k; ++c) {
        if (rem[c] % h[c][c] != 0) return std::nullopt;
        Int q = rem[c] / h[c][c];
        y[c] = q;
        if (q != 0) row_submul(rem, h[c], q);
    }
    for (Int v : rem)
        if (v != 0) return std::nullopt;
    return y;
}

bool lattice_contains(const Mat& h, const Row& x) {
    Row rem = x;
    const int k = static_cast<int>(h.size());
    for (int c = 0; c < k; ++c) {
        if (rem[c] % h[c][c] != 0) return false;
        Int q = rem[c] / h[c][c];
        if (q != 0) row_submul(rem, h[c], q);
    }
    for (Int v : rem)
        if (v != 0) return false;
    return true;
}

Snf smith(Mat a) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    Snf s;
    s.u.assign(m, Row(m, 0));
    s.v.assign(n, Row(n, 0));
    s.vinv.assign(n, Row(n, 0));
    for (int i = 0; i < m; ++i) s.u[i][i] = 1;
    for (int i = 0; i < n; ++i) s.v[i][i] = s.vinv[i][i] = 1;

    auto col_submul = [&](Mat& mat, int dst, int src, Int q) {
        for (auto& row : mat) row[dst] -= checked_mul(q, row[src]);
    };
    auto col_swap = [&](Mat& mat, int i, int j) {
        for (auto& row : mat) std::swap(row[i], row[j]);
    };
    auto col_neg = [&](Mat& mat, int i) {
        for (auto& row : mat) row[i] = -row[i];
    };
    // Column op on a, mirrored on v; inverse op applied to vinv rows.
    auto apply_col_submul = [&](int dst, int src, Int q) {
        col_submul(a, dst, src, q);
        col_submul(s.v, dst, src, q);
        row_submul(s.vinv[src], s.vinv[dst], -q);  // row src += q * row dst
    };
    auto apply_col_swap = [&](int i, int j) {
        col_swap(a, i, j);
        col_swap(s.v, i, j);
        std::swap(s.vinv[i], s.vinv[j]);
    };
    auto apply_col_neg = [&](int i) {
        col_neg(a, i);
        col_neg(s.v, i);
        for (auto& v : s.vinv[i]) v = -v;
    };
    auto apply_row_submul = [&](int dst, int src, Int q) {
        row_submul(a[dst], a[src], q);
        row_submul(s.u[dst], s.u[src], q);
    };

    int t = 0;
    while (t < m && t < n) {
        // Find a nonzero pivot in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) {
            std::swap(a[pi], a[t]);
            std::swap(s.u[pi], s.u[t]);
        }
        if (pj != t) apply_col_swap(pj, t);
        if (a[t][t] < 0) apply_col_neg(t);

        bool dirty = false;
        for (int i = t + 1; i < m; ++i) {
            Int q = a[i][t] / a[t][t];
            if (q != 0) apply_row_submul(i, t, q);
            if (a[i][t] != 0) dirty = true;
        }
        for (int j = t + 1; j < n; ++j) {
            Int q = a[t][j] / a[t][t];
            if (q != 0) apply_col_submul(j, t, q);
            if (a[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // remainders left, pick a smaller pivot
        ++t;
    }
    s.diag.resize(std::min(m, n));
    for (size_t i = 0; i < s.diag.size(); ++i) s.diag[i] = a[i][i];
    return s;
}

}  // namespace ringforge::linalg
