#include "matrix.hpp"

namespace functorlab {

Matrix Matrix::operator*(const Matrix& o) const {
    check(tag_ == o.tag_, ErrKind::Validation, "matrix ring mismatch");
    check(cols_ == o.rows_, ErrKind::Validation, "matrix shape mismatch in product");
    Matrix r(tag_, rows_, o.cols_);
    // group o's entries by row for the sparse product
    std::map<uint32_t, std::vector<std::pair<uint32_t, const Scalar*>>> byrow;
    for (const auto& [rc, v] : o.e_)
        byrow[rc.first].push_back({rc.second, &v});
    for (const auto& [rc, v] : e_) {
        auto it = byrow.find(rc.second);
        if (it == byrow.end())
            continue;
        for (const auto& [c2, v2] : it->second)
            r.add_to(rc.first, c2, v * *v2);
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check(tag_ == o.tag_ && rows_ == o.rows_ && cols_ == o.cols_, ErrKind::Validation,
          "matrix shape/ring mismatch in sum");
    Matrix r = *this;
    for (const auto& [rc, v] : o.e_)
        r.add_to(rc.first, rc.second, v);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(tag_, cols_, rows_);
    for (const auto& [rc, v] : e_)
        r.set(rc.second, rc.first, v);
    return r;
}

std::vector<std::vector<Scalar>> Matrix::dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, Scalar::zero(tag_)));
    for (const auto& [rc, v] : e_)
        d[rc.first][rc.second] = v;
    return d;
}

RankKernel rank_kernel_cokernel(const Matrix& m) {
    check(m.tag().is_field(), ErrKind::Validation,
          "rank/kernel needs a field; over Z use the Smith form path");
    const RingTag k = m.tag();
    auto a = m.dense();
    const uint32_t rows = m.rows(), cols = m.cols();

    // column-pivot Gaussian elimination
    std::vector<int64_t> pivot_of_col(cols, -1);
    uint32_t rank = 0;
    for (uint32_t c = 0; c < cols && rank < rows; ++c) {
        uint32_t pr = rank;
        while (pr < rows && a[pr][c].is_zero())
            ++pr;
        if (pr == rows)
            continue;
        std::swap(a[rank], a[pr]);
        Scalar piv = a[rank][c].inv();
        for (uint32_t j = c; j < cols; ++j)
            a[rank][j] = a[rank][j] * piv;
        for (uint32_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero())
                continue;
            Scalar f = a[r][c];
            for (uint32_t j = c; j < cols; ++j)
                a[r][j] = a[r][j] - f * a[rank][j];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }

    RankKernel out;
    out.rank = rank;
    out.coker_dim = rows - rank;
    for (uint32_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        std::vector<Scalar> v(cols, Scalar::zero(k));
        v[c] = Scalar::one(k);
        for (uint32_t c2 = 0; c2 < c; ++c2)
            if (pivot_of_col[c2] >= 0)
                v[c2] = -a[size_t(pivot_of_col[c2])][c];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace functorlab
