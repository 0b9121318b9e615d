#pragma once

#include "core/fock.hpp"
#include "core/rng.hpp"

namespace qtx::test {

inline CMat random_complex(Rng& rng, int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        }
    }
    return m;
}

inline CMat random_hermitian(Rng& rng, int n) {
    CMat m = random_complex(rng, n);
    return 0.5 * (m + m.adjoint().eval());
}

// Random full-rank density matrix: G G† normalized.
inline CMat random_density(Rng& rng, int n) {
    CMat g = random_complex(rng, n);
    CMat rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

// Random Hermitian with unit trace but not necessarily positive.
inline CMat random_hermitian_unit_trace(Rng& rng, int n) {
    CMat m = random_hermitian(rng, n);
    const Complex tr = m.trace();
    m += ((1.0 - tr) / static_cast<double>(n)) * CMat::Identity(n, n);
    return m;
}

}  // namespace qtx::test
