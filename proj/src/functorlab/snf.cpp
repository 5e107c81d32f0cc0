#include "snf.hpp"

namespace functorlab {

ZMat zmat_identity(uint32_t n) {
    ZMat m(n, std::vector<mpz_class>(n, 0));
    for (uint32_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    if (a.empty() || b.empty())
        return {};
    size_t n = a.size(), m = b[0].size(), k = b.size();
    check(a[0].size() == k, ErrKind::Validation, "zmat shape mismatch");
    ZMat r(n, std::vector<mpz_class>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (size_t j = 0; j < m; ++j)
                if (b[t][j] != 0)
                    r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

ZMat zmat_from(const Matrix& m) {
    check(m.tag().kind == RingTag::Z, ErrKind::Validation, "integral matrix expected");
    ZMat a(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries())
        a[rc.first][rc.second] = v.num();
    return a;
}

namespace {

struct Work {
    ZMat a;
    uint32_t rows, cols;
    bool track;
    ZMat L, R, Linv, Rinv;

    Work(ZMat m, bool t) : a(std::move(m)), track(t) {
        rows = uint32_t(a.size());
        cols = rows ? uint32_t(a[0].size()) : 0;
        if (track) {
            L = zmat_identity(rows);
            Linv = zmat_identity(rows);
            R = zmat_identity(cols);
            Rinv = zmat_identity(cols);
        }
    }

    void swap_rows(uint32_t i, uint32_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        if (track) {
            std::swap(L[i], L[j]);
            for (uint32_t r = 0; r < rows; ++r)
                std::swap(Linv[r][i], Linv[r][j]);
        }
    }
    void swap_cols(uint32_t i, uint32_t j) {
        if (i == j)
            return;
        for (uint32_t r = 0; r < rows; ++r)
            std::swap(a[r][i], a[r][j]);
        if (track) {
            for (uint32_t r = 0; r < cols; ++r)
                std::swap(R[r][i], R[r][j]);
            std::swap(Rinv[i], Rinv[j]);
        }
    }
    // row i -= q * row j
    void row_sub(uint32_t i, uint32_t j, const mpz_class& q) {
        if (q == 0)
            return;
        for (uint32_t c = 0; c < cols; ++c)
            a[i][c] -= q * a[j][c];
        if (track) {
            for (uint32_t c = 0; c < rows; ++c)
                L[i][c] -= q * L[j][c];
            for (uint32_t r = 0; r < rows; ++r)
                Linv[r][j] += q * Linv[r][i];
        }
    }
    // col i -= q * col j
    void col_sub(uint32_t i, uint32_t j, const mpz_class& q) {
        if (q == 0)
            return;
        for (uint32_t r = 0; r < rows; ++r)
            a[r][i] -= q * a[r][j];
        if (track) {
            for (uint32_t r = 0; r < cols; ++r)
                R[r][i] -= q * R[r][j];
            for (uint32_t c = 0; c < cols; ++c)
                Rinv[j][c] += q * Rinv[i][c];
        }
    }
    void negate_row(uint32_t i) {
        for (uint32_t c = 0; c < cols; ++c)
            a[i][c] = -a[i][c];
        if (track) {
            for (uint32_t c = 0; c < rows; ++c)
                L[i][c] = -L[i][c];
            for (uint32_t r = 0; r < rows; ++r)
                Linv[r][i] = -Linv[r][i];
        }
    }
};

} // namespace

SmithForm smith_dense(ZMat m, bool with_transforms) {
    Work w(std::move(m), with_transforms);
    const uint32_t n = std::min(w.rows, w.cols);
    uint32_t t = 0;
    for (; t < n; ++t) {
        // pivot: minimal nonzero absolute value in the remaining block
        // (keeps intermediate coefficients from blowing up on sparse +-1 input)
        int64_t pr = -1, pc = -1;
        mpz_class best;
        for (uint32_t i = t; i < w.rows; ++i)
            for (uint32_t j = t; j < w.cols; ++j) {
                if (w.a[i][j] == 0)
                    continue;
                mpz_class v = abs(w.a[i][j]);
                if (pr < 0 || v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        w.swap_rows(t, uint32_t(pr));
        w.swap_cols(t, uint32_t(pc));

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (uint32_t i = t + 1; i < w.rows; ++i) {
                if (w.a[i][t] == 0)
                    continue;
                mpz_class q = w.a[i][t] / w.a[t][t]; // truncated division
                w.row_sub(i, t, q);
                if (w.a[i][t] != 0) { // remainder smaller: make it the pivot
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (uint32_t j = t + 1; j < w.cols; ++j) {
                if (w.a[t][j] == 0)
                    continue;
                mpz_class q = w.a[t][j] / w.a[t][t];
                w.col_sub(j, t, q);
                if (w.a[t][j] != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (w.a[t][t] < 0)
            w.negate_row(t);
    }

    // enforce the divisibility chain d_i | d_{i+1}
    for (bool sorted = false; !sorted;) {
        sorted = true;
        for (uint32_t i = 0; i + 1 < t; ++i) {
            if (w.a[i + 1][i + 1] % w.a[i][i] == 0)
                continue;
            sorted = false;
            // fold a_{i+1,i+1} into column i, then re-reduce the 2x2 block
            w.col_sub(i, i + 1, -1); // col i += col i+1
            for (bool dirty = true; dirty;) {
                dirty = false;
                mpz_class q = w.a[i + 1][i] / w.a[i][i];
                w.row_sub(i + 1, i, q);
                if (w.a[i + 1][i] != 0) {
                    w.swap_rows(i, i + 1);
                    dirty = true;
                    continue;
                }
                q = w.a[i][i + 1] / w.a[i][i];
                w.col_sub(i + 1, i, q);
                if (w.a[i][i + 1] != 0) {
                    w.swap_cols(i, i + 1);
                    dirty = true;
                }
            }
            if (w.a[i][i] < 0)
                w.negate_row(i);
            if (w.a[i + 1][i + 1] < 0)
                w.negate_row(i + 1);
        }
    }

    SmithForm out;
    out.rank = t;
    out.has_transforms = with_transforms;
    for (uint32_t i = 0; i < t; ++i)
        out.invariant_factors.push_back(w.a[i][i]);
    if (with_transforms) {
        out.L = std::move(w.L);
        out.R = std::move(w.R);
        out.Linv = std::move(w.Linv);
        out.Rinv = std::move(w.Rinv);
    }
    return out;
}

SmithForm smith_normal_form(const Matrix& m, bool with_transforms) {
    return smith_dense(zmat_from(m), with_transforms);
}

ZMat kernel_z(const ZMat& a) {
    if (a.empty())
        return {};
    uint32_t cols = uint32_t(a[0].size());
    SmithForm s = smith_dense(a, true);
    ZMat ker(cols, std::vector<mpz_class>());
    for (uint32_t j = s.rank; j < cols; ++j)
        for (uint32_t r = 0; r < cols; ++r)
            ker[r].push_back(s.R[r][j]);
    if (cols == 0 || s.rank == cols)
        return ZMat(cols, std::vector<mpz_class>());
    return ker;
}

ZMat solve_z(const ZMat& a, const ZMat& b) {
    check(!a.empty() && !b.empty() && a.size() == b.size(), ErrKind::Validation,
          "solve_z shape mismatch");
    uint32_t cols = uint32_t(a[0].size());
    uint32_t bcols = uint32_t(b[0].size());
    SmithForm s = smith_dense(a, true);
    ZMat lb = zmat_mul(s.L, b);
    ZMat y(cols, std::vector<mpz_class>(bcols, 0));
    for (uint32_t i = 0; i < uint32_t(a.size()); ++i)
        for (uint32_t j = 0; j < bcols; ++j) {
            if (i < s.rank) {
                check(lb[i][j] % s.invariant_factors[i] == 0, ErrKind::Validation,
                      "solve_z: no integral solution");
                y[i][j] = lb[i][j] / s.invariant_factors[i];
            } else {
                check(lb[i][j] == 0, ErrKind::Validation, "solve_z: inconsistent system");
            }
        }
    return zmat_mul(s.R, y);
}

std::vector<mpz_class> ZQuotient::coords(const std::vector<mpz_class>& v) const {
    check(v.size() == k, ErrKind::Validation, "ZQuotient::coords dimension mismatch");
    std::vector<mpz_class> w(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
        for (uint32_t j = 0; j < k; ++j)
            if (L[i][j] != 0)
                w[i] += L[i][j] * v[j];
        if (diag[i] != 0) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), w[i].get_mpz_t(), diag[i].get_mpz_t());
            w[i] = r;
        }
    }
    return w;
}

ZQuotient z_quotient(uint32_t k, const ZMat& rels) {
    ZQuotient q;
    q.k = k;
    if (k == 0)
        return q;
    ZMat r = rels;
    if (r.empty())
        r = ZMat(k, std::vector<mpz_class>());
    check(r.size() == k, ErrKind::Validation, "z_quotient: relation rows mismatch");
    if (r[0].empty()) { // no relations: free quotient
        q.diag.assign(k, 0);
        q.gen_basis = zmat_identity(k);
        q.L = zmat_identity(k);
        return q;
    }
    SmithForm s = smith_dense(r, true);
    q.diag.assign(k, 0);
    for (uint32_t i = 0; i < s.rank; ++i)
        q.diag[i] = s.invariant_factors[i];
    q.gen_basis = s.Linv;
    q.L = s.L;
    return q;
}

} // namespace functorlab
