#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "scalar.hpp"

namespace functorlab {

/* Sparse exact matrix. Entries live in a map keyed by (row, col), so
 * iteration order is fixed and no zero is ever stored. */
class Matrix {
  public:
    Matrix() : tag_(RingTag::integers()), rows_(0), cols_(0) {}
    Matrix(RingTag tag, uint32_t rows, uint32_t cols) : tag_(tag), rows_(rows), cols_(cols) {}

    static Matrix identity(RingTag tag, uint32_t n) {
        Matrix m(tag, n, n);
        for (uint32_t i = 0; i < n; ++i)
            m.set(i, i, Scalar::one(tag));
        return m;
    }

    RingTag tag() const { return tag_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    size_t nnz() const { return e_.size(); }

    void set(uint32_t r, uint32_t c, const Scalar& v) {
        check(r < rows_ && c < cols_, ErrKind::Validation, "matrix index out of bounds");
        check(v.tag() == tag_, ErrKind::Validation, "entry ring mismatch");
        if (v.is_zero())
            e_.erase({r, c});
        else
            e_.insert_or_assign({r, c}, v);
    }
    void add_to(uint32_t r, uint32_t c, const Scalar& v) {
        auto it = e_.find({r, c});
        if (it == e_.end())
            set(r, c, v);
        else {
            Scalar s = it->second + v;
            if (s.is_zero())
                e_.erase(it);
            else
                it->second = s;
        }
    }
    Scalar at(uint32_t r, uint32_t c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? Scalar::zero(tag_) : it->second;
    }

    const std::map<std::pair<uint32_t, uint32_t>, Scalar>& entries() const { return e_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix transpose() const;
    bool is_zero() const { return e_.empty(); }
    bool operator==(const Matrix& o) const {
        return tag_ == o.tag_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    // dense row dump (small matrices only; used by SNF and tests)
    std::vector<std::vector<Scalar>> dense() const;

  private:
    RingTag tag_;
    uint32_t rows_, cols_;
    std::map<std::pair<uint32_t, uint32_t>, Scalar> e_;
};

/* Result of rank/kernel/cokernel over a field. Kernel basis columns are
 * reduced and ordered by pivot-free position, so output is reproducible. */
struct RankKernel {
    uint32_t rank = 0;
    std::vector<std::vector<Scalar>> kernel; // each of length cols
    uint32_t coker_dim = 0;
};

RankKernel rank_kernel_cokernel(const Matrix& m);

} // namespace functorlab
