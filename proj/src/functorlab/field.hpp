#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace functorlab {

/* Field kernels used by the engine. The public Matrix type keeps exact
 * Scalars; internally we want flat storage and tight loops, so the engine is
 * templated on one of these field types:
 *   FpC<P>  - F_p with compile-time p (hot paths vectorize)
 *   FpD     - F_p with runtime p
 *   FQ      - exact rationals
 */

inline uint32_t mod_inverse(uint32_t a, uint32_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    check(r == 1, ErrKind::Validation, "not invertible mod p");
    return uint32_t(t < 0 ? t + p : t);
}

template <uint32_t P> struct FpC {
    using elem = uint32_t;
    static constexpr bool is_rational = false;
    uint32_t p() const { return P; }
    RingTag tag() const { return RingTag::fp(P); }
    elem zero() const { return 0; }
    elem one() const { return 1 % P; }
    bool is_zero(elem a) const { return a == 0; }
    elem add(elem a, elem b) const {
        uint32_t s = a + b;
        return s >= P ? s - P : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + P - b; }
    elem neg(elem a) const { return a == 0 ? 0 : P - a; }
    elem mul(elem a, elem b) const { return uint32_t((uint64_t(a) * b) % P); }
    elem inv(elem a) const { return mod_inverse(a, P); }
    elem from_int(int64_t n) const {
        int64_t r = n % int64_t(P);
        return elem(r < 0 ? r + P : r);
    }
    bool eq(elem a, elem b) const { return a == b; }
    std::string str(elem a) const { return std::to_string(a); }
    Scalar scalar(elem a) const { return Scalar(RingTag::fp(P), long(a)); }
};

struct FpD {
    uint32_t P = 2;
    using elem = uint32_t;
    static constexpr bool is_rational = false;
    uint32_t p() const { return P; }
    RingTag tag() const { return RingTag::fp(P); }
    elem zero() const { return 0; }
    elem one() const { return 1 % P; }
    bool is_zero(elem a) const { return a == 0; }
    elem add(elem a, elem b) const {
        uint32_t s = a + b;
        return s >= P ? s - P : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + P - b; }
    elem neg(elem a) const { return a == 0 ? 0 : P - a; }
    elem mul(elem a, elem b) const { return uint32_t((uint64_t(a) * b) % P); }
    elem inv(elem a) const { return mod_inverse(a, P); }
    elem from_int(int64_t n) const {
        int64_t r = n % int64_t(P);
        return elem(r < 0 ? r + P : r);
    }
    bool eq(elem a, elem b) const { return a == b; }
    std::string str(elem a) const { return std::to_string(a); }
    Scalar scalar(elem a) const { return Scalar(RingTag::fp(P), long(a)); }
};

struct FQ {
    using elem = mpq_class;
    static constexpr bool is_rational = true;
    uint32_t p() const { return 0; }
    RingTag tag() const { return RingTag::rationals(); }
    elem zero() const { return mpq_class(0); }
    elem one() const { return mpq_class(1); }
    bool is_zero(const elem& a) const { return a == 0; }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem inv(const elem& a) const {
        check(a != 0, ErrKind::Validation, "inverse of zero");
        return 1 / a;
    }
    elem from_int(int64_t n) const { return mpq_class(long(n)); }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    std::string str(const elem& a) const { return a.get_str(); }
    Scalar scalar(const elem& a) const { return Scalar(RingTag::rationals(), a); }
};

template <class F> using Vec = std::vector<typename F::elem>;

/* Sparse vector: (index, value) pairs sorted by index, no zeros. */
template <class F> struct SpVec {
    std::vector<std::pair<uint32_t, typename F::elem>> nz;
    void push(uint32_t i, typename F::elem v) { nz.push_back({i, std::move(v)}); }
    bool empty() const { return nz.empty(); }
};

template <class F> Vec<F> to_dense(const F& k, const SpVec<F>& v, size_t n) {
    Vec<F> d(n, k.zero());
    for (const auto& [i, x] : v.nz)
        d[i] = k.add(d[i], x);
    return d;
}

template <class F> SpVec<F> to_sparse(const F& k, const Vec<F>& v) {
    SpVec<F> s;
    for (uint32_t i = 0; i < v.size(); ++i)
        if (!k.is_zero(v[i]))
            s.push(i, v[i]);
    return s;
}

/* Column-compressed sparse matrix. */
template <class F> struct SpMat {
    uint32_t rows = 0, cols = 0;
    std::vector<SpVec<F>> col;

    SpMat() = default;
    SpMat(uint32_t r, uint32_t c) : rows(r), cols(c), col(c) {}

    static SpMat identity(const F& k, uint32_t n) {
        SpMat m(n, n);
        for (uint32_t i = 0; i < n; ++i)
            m.col[i].push(i, k.one());
        return m;
    }
    size_t nnz() const {
        size_t n = 0;
        for (const auto& c : col)
            n += c.nz.size();
        return n;
    }

    Vec<F> apply(const F& k, const Vec<F>& v) const {
        check(v.size() == cols, ErrKind::Validation, "SpMat::apply shape");
        Vec<F> out(rows, k.zero());
        for (uint32_t c = 0; c < cols; ++c) {
            if (k.is_zero(v[c]))
                continue;
            for (const auto& [r, x] : col[c].nz)
                out[r] = k.add(out[r], k.mul(x, v[c]));
        }
        return out;
    }
    SpVec<F> apply_sparse(const F& k, const SpVec<F>& v) const {
        Vec<F> out(rows, k.zero());
        for (const auto& [c, vc] : v.nz)
            for (const auto& [r, x] : col[c].nz)
                out[r] = k.add(out[r], k.mul(x, vc));
        return to_sparse(k, out);
    }
    SpMat compose(const F& k, const SpMat& g) const { // (*this) o g
        check(cols == g.rows, ErrKind::Validation, "SpMat::compose shape");
        SpMat out(rows, g.cols);
        for (uint32_t c = 0; c < g.cols; ++c)
            out.col[c] = apply_sparse(k, g.col[c]);
        return out;
    }
    SpMat transpose(const F& k) const {
        SpMat out(cols, rows);
        std::vector<std::vector<std::pair<uint32_t, typename F::elem>>> tmp(rows);
        for (uint32_t c = 0; c < cols; ++c)
            for (const auto& [r, x] : col[c].nz)
                tmp[r].push_back({c, x});
        for (uint32_t r = 0; r < rows; ++r)
            out.col[r].nz = std::move(tmp[r]);
        (void)k;
        return out;
    }
    bool equals(const F& k, const SpMat& o) const {
        if (rows != o.rows || cols != o.cols)
            return false;
        for (uint32_t c = 0; c < cols; ++c) {
            Vec<F> a = to_dense(k, col[c], rows), b = to_dense(k, o.col[c], rows);
            for (uint32_t r = 0; r < rows; ++r)
                if (!k.eq(a[r], b[r]))
                    return false;
        }
        return true;
    }
    // Kronecker product in row-major pair order ((i1,i2) -> i1*rows2+i2)
    static SpMat kron(const F& k, const SpMat& a, const SpMat& b) {
        SpMat out(a.rows * b.rows, a.cols * b.cols);
        for (uint32_t ca = 0; ca < a.cols; ++ca)
            for (uint32_t cb = 0; cb < b.cols; ++cb) {
                auto& dst = out.col[ca * b.cols + cb];
                for (const auto& [ra, xa] : a.col[ca].nz)
                    for (const auto& [rb, xb] : b.col[cb].nz)
                        dst.push(ra * b.rows + rb, k.mul(xa, xb));
            }
        return out;
    }
};

/* Dense row-major matrix with the elimination kit. */
template <class F> struct DenseMat {
    uint32_t rows = 0, cols = 0;
    Vec<F> a;

    DenseMat() = default;
    DenseMat(const F& k, uint32_t r, uint32_t c) : rows(r), cols(c), a(size_t(r) * c, k.zero()) {}

    typename F::elem& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
    const typename F::elem& at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }

    static DenseMat from_sparse(const F& k, const SpMat<F>& m) {
        DenseMat d(k, m.rows, m.cols);
        for (uint32_t c = 0; c < m.cols; ++c)
            for (const auto& [r, x] : m.col[c].nz)
                d.at(r, c) = k.add(d.at(r, c), x);
        return d;
    }
    Vec<F> apply(const F& k, const Vec<F>& v) const {
        check(v.size() == cols, ErrKind::Validation, "DenseMat::apply shape");
        Vec<F> out(rows, k.zero());
        for (uint32_t r = 0; r < rows; ++r) {
            typename F::elem s = k.zero();
            const auto* row = &a[size_t(r) * cols];
            for (uint32_t c = 0; c < cols; ++c)
                if (!k.is_zero(v[c]))
                    s = k.add(s, k.mul(row[c], v[c]));
            out[r] = s;
        }
        return out;
    }
    static DenseMat mul(const F& k, const DenseMat& x, const DenseMat& y) {
        check(x.cols == y.rows, ErrKind::Validation, "DenseMat::mul shape");
        DenseMat out(k, x.rows, y.cols);
        for (uint32_t i = 0; i < x.rows; ++i)
            for (uint32_t t = 0; t < x.cols; ++t) {
                const auto& xv = x.at(i, t);
                if (k.is_zero(xv))
                    continue;
                const auto* yr = &y.a[size_t(t) * y.cols];
                auto* orow = &out.a[size_t(i) * y.cols];
                for (uint32_t j = 0; j < y.cols; ++j)
                    orow[j] = k.add(orow[j], k.mul(xv, yr[j]));
            }
        return out;
    }
};

/* Incremental row echelon with optional coefficient tracking: rows are
 * reduced against each other; insert() returns false when the vector was
 * already in the span. Tracking vectors carry along arbitrary tag payloads
 * (used to read off homology coordinates and preimages). */
template <class F> class Echelon {
  public:
    Echelon(const F& k, uint32_t width, uint32_t tagwidth = 0)
        : k_(k), width_(width), tagwidth_(tagwidth) {}

    uint32_t rank() const { return uint32_t(rows_.size()); }
    uint32_t width() const { return width_; }

    // reduce v (and tag alongside); returns residual and its tag
    void reduce(Vec<F>& v, Vec<F>* tag = nullptr) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (k_.is_zero(c))
                continue;
            typename F::elem f = c; // rows are pivot-normalized
            axpy(v, rows_[i], k_.neg(f));
            if (tag && tagwidth_)
                axpy(*tag, tags_[i], k_.neg(f));
        }
    }

    bool contains(Vec<F> v) const {
        reduce(v);
        return first_nonzero(v) < 0;
    }

    // insert (reduced) vector; returns true if it extended the span
    bool insert(Vec<F> v, Vec<F> tag = {}) {
        if (tagwidth_ && tag.empty())
            tag = Vec<F>(tagwidth_, k_.zero());
        reduce(v, tagwidth_ ? &tag : nullptr);
        int64_t p = first_nonzero(v);
        if (p < 0)
            return false;
        typename F::elem inv = k_.inv(v[size_t(p)]);
        scale(v, inv);
        if (tagwidth_)
            scale(tag, inv);
        // back-substitute into existing rows to keep them fully reduced
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = rows_[i][size_t(p)];
            if (k_.is_zero(c))
                continue;
            typename F::elem f = c;
            axpy(rows_[i], v, k_.neg(f));
            if (tagwidth_)
                axpy(tags_[i], tag, k_.neg(f));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(uint32_t(p));
        if (tagwidth_)
            tags_.push_back(std::move(tag));
        return true;
    }

    const std::vector<Vec<F>>& rows() const { return rows_; }
    const std::vector<uint32_t>& pivots() const { return pivots_; }
    const std::vector<Vec<F>>& tags() const { return tags_; }

  private:
    void axpy(Vec<F>& y, const Vec<F>& x, typename F::elem c) const {
        for (size_t i = 0; i < y.size(); ++i)
            y[i] = k_.add(y[i], k_.mul(c, x[i]));
    }
    void scale(Vec<F>& y, typename F::elem c) const {
        for (auto& e : y)
            e = k_.mul(e, c);
    }
    int64_t first_nonzero(const Vec<F>& v) const {
        for (size_t i = 0; i < v.size(); ++i)
            if (!k_.is_zero(v[i]))
                return int64_t(i);
        return -1;
    }

    F k_;
    uint32_t width_, tagwidth_;
    std::vector<Vec<F>> rows_;
    std::vector<uint32_t> pivots_;
    std::vector<Vec<F>> tags_;
};

/* rank of a sparse matrix */
template <class F> uint32_t sp_rank(const F& k, const SpMat<F>& m) {
    Echelon<F> e(k, m.rows);
    for (uint32_t c = 0; c < m.cols; ++c)
        e.insert(to_dense(k, m.col[c], m.rows));
    return e.rank();
}

/* kernel basis (dense columns) of a sparse matrix, deterministic order */
template <class F> std::vector<Vec<F>> sp_kernel(const F& k, const SpMat<F>& m) {
    // eliminate columns, tracking the combination that produced each row
    Echelon<F> e(k, m.rows, m.cols);
    std::vector<Vec<F>> ker;
    for (uint32_t c = 0; c < m.cols; ++c) {
        Vec<F> tag(m.cols, k.zero());
        tag[c] = k.one();
        Vec<F> v = to_dense(k, m.col[c], m.rows);
        // manual reduce to capture the tag of a fully-reduced column
        e.reduce(v, &tag);
        bool zero = true;
        for (const auto& x : v)
            if (!k.is_zero(x)) {
                zero = false;
                break;
            }
        if (zero)
            ker.push_back(std::move(tag));
        else
            e.insert(std::move(v), std::move(tag));
    }
    return ker;
}

/* kernel basis of the row space collected in an echelon (rows = equations
 * over `width` variables): one basis vector per non-pivot column */
template <class F> std::vector<Vec<F>> kernel_from_rref(const F& k, const Echelon<F>& e) {
    std::vector<bool> is_pivot(e.width(), false);
    for (uint32_t p : e.pivots())
        is_pivot[p] = true;
    std::vector<Vec<F>> ker;
    for (uint32_t c = 0; c < e.width(); ++c) {
        if (is_pivot[c])
            continue;
        Vec<F> v(e.width(), k.zero());
        v[c] = k.one();
        for (size_t i = 0; i < e.rows().size(); ++i)
            v[e.pivots()[i]] = k.neg(e.rows()[i][c]);
        ker.push_back(std::move(v));
    }
    return ker;
}

/* solve M x = b; returns one solution if it exists */
template <class F>
std::optional<Vec<F>> sp_solve(const F& k, const SpMat<F>& m, const Vec<F>& b) {
    Echelon<F> e(k, m.rows, m.cols);
    for (uint32_t c = 0; c < m.cols; ++c) {
        Vec<F> tag(m.cols, k.zero());
        tag[c] = k.one();
        e.insert(to_dense(k, m.col[c], m.rows), std::move(tag));
    }
    Vec<F> v = b, tag(m.cols, k.zero());
    e.reduce(v, &tag);
    for (const auto& x : v)
        if (!k.is_zero(x))
            return std::nullopt;
    for (auto& x : tag)
        x = k.neg(x);
    return tag;
}

} // namespace functorlab
