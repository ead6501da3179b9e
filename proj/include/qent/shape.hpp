#pragma once

#include <vector>

namespace qent {

// An n x m bipartition of a linear index range of length n*m. The shared
// index map is row-major: linear index s (0-based) splits as (j, k) with
// s = j*m + k, j = 0..n-1, k = 0..m-1.
struct BipartitionShape {
    int n;
    int m;

    int total() const { return n * m; }
    bool operator==(const BipartitionShape& o) const { return n == o.n && m == o.m; }
};

// All ordered factor pairs (n, m) with n, m >= 2 and n*m = dim, n ascending.
std::vector<BipartitionShape> ordered_factorizations(int dim);

// Smallest target dimension >= dim admitting a factorization with both
// factors >= 2 (dim itself when it already factors).
int smallest_padded_dim(int dim);

}  // namespace qent
