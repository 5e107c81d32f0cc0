#pragma once

#include <gmpxx.h>
#include <vector>

#include "matrix.hpp"

namespace functorlab {

using ZMat = std::vector<std::vector<mpz_class>>; // dense, row major

ZMat zmat_identity(uint32_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_from(const Matrix& m);

/* Smith normal form L*A*R = diag(d_1..d_r), d_i | d_{i+1}, L and R unimodular.
 * invariant_factors keeps the 1s (the HomologySummary layer drops units). */
struct SmithForm {
    std::vector<mpz_class> invariant_factors;
    uint32_t rank = 0;
    bool has_transforms = false;
    ZMat L, R, Linv, Rinv;
};

SmithForm smith_normal_form(const Matrix& m, bool with_transforms = false);
SmithForm smith_dense(ZMat a, bool with_transforms);

// basis of { x : A x = 0 } over Z, as columns (may be empty)
ZMat kernel_z(const ZMat& a);

/* Solve A*X = B exactly over Z. Fails if no integral solution exists. */
ZMat solve_z(const ZMat& a, const ZMat& b);

/* Presentation of the quotient Z^k / col-span(rels) in a unimodular basis:
 * generator i of the quotient is column i of gen_basis, of order diag[i]
 * (0 = infinite). Units (order 1) are kept here; callers filter. */
struct ZQuotient {
    uint32_t k = 0;
    std::vector<mpz_class> diag; // length k
    ZMat gen_basis;              // k x k, columns are generators (Linv)
    ZMat L;                      // coordinates: (L v)_i mod diag[i]
    // coordinates of v in the cyclic decomposition (length k, reduced)
    std::vector<mpz_class> coords(const std::vector<mpz_class>& v) const;
};

ZQuotient z_quotient(uint32_t k, const ZMat& rels);

} // namespace functorlab
