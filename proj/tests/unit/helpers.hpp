#pragma once

#include "permcx/matrix.hpp"
#include "permcx/rng.hpp"

namespace permcx::testing {

inline Matrix random_matrix(const FieldPtr& f, int rows, int cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<fq_t>(rng.uniform(f->q())));
    return m;
}

} // namespace permcx::testing
