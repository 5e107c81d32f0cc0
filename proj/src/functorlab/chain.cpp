#include "chain.hpp"

namespace functorlab {

std::string HomologySummary::Deg::str() const {
    if (is_zero())
        return "0";
    std::string s;
    if (free_rank > 0)
        s += "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion)
        s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    return s;
}

std::string HomologySummary::str() const {
    std::string s;
    for (int n = lo; n <= hi; ++n)
        s += "H_" + std::to_string(n) + " = " + at(n).str() + (n < hi ? "; " : "");
    return s;
}

const Matrix& ChainComplex::diff(int n) const {
    static const Matrix zero;
    if (n < lo_ || n > hi())
        return zero;
    return diffs_[size_t(n - lo_)];
}

void ChainComplex::set_diff(int n, Matrix m) {
    check(n >= lo_ && n <= hi(), ErrKind::Validation, "differential degree out of range");
    uint32_t target = rank(n - 1);
    check(m.rows() == target && m.cols() == rank(n), ErrKind::Validation,
          "differential shape mismatch at degree " + std::to_string(n));
    check(m.tag() == tag_, ErrKind::Validation, "differential ring mismatch");
    diffs_[size_t(n - lo_)] = std::move(m);
}

void ChainComplex::validate() const {
    for (int n = lo_ + 1; n <= hi(); ++n) {
        if (rank(n) == 0 || rank(n - 1) == 0 || rank(n - 2) == 0)
            continue;
        if (!(diff(n - 1) * diff(n)).is_zero())
            fail(ErrKind::Validation,
                 "d^2 != 0 at degree " + std::to_string(n) + " -> " + std::to_string(n - 2));
    }
}

ChainComplex ChainComplex::shifted(int by) const {
    ChainComplex c(tag_, lo_ + by, ranks_);
    for (int n = lo_; n <= hi(); ++n)
        c.set_diff(n + by, diff(n));
    return c;
}

HomologySummary homology(const ChainComplex& c) {
    c.validate();
    HomologySummary h;
    h.tag = c.tag();
    h.lo = c.lo();
    h.hi = c.hi();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        HomologySummary::Deg deg;
        if (c.rank(n) == 0) {
            h.degs.push_back(deg);
            continue;
        }
        if (c.tag().is_field()) {
            RankKernel out = rank_kernel_cokernel(c.diff(n));
            uint32_t rank_in = c.rank(n + 1) ? rank_kernel_cokernel(c.diff(n + 1)).rank : 0;
            uint32_t ker = c.rank(n) - out.rank;
            deg.free_rank = ker - rank_in;
        } else {
            // kernel of d_n, then quotient by the image of d_{n+1}
            ZMat ker;
            uint32_t kdim;
            if (c.rank(n - 1) == 0) {
                kdim = c.rank(n);
                ker = zmat_identity(kdim);
            } else {
                ker = kernel_z(zmat_from(c.diff(n)));
                kdim = ker.empty() ? 0 : uint32_t(ker[0].size());
            }
            if (kdim == 0) {
                h.degs.push_back(deg);
                continue;
            }
            ZMat rels(kdim, std::vector<mpz_class>());
            if (c.rank(n + 1) > 0) {
                ZMat img = zmat_from(c.diff(n + 1));
                ZMat y = solve_z(ker, img); // d^2=0 guarantees solvability
                rels = y;
            }
            ZQuotient q = z_quotient(kdim, rels);
            for (uint32_t i = 0; i < q.k; ++i) {
                if (q.diag[i] == 0)
                    ++deg.free_rank;
                else if (q.diag[i] > 1)
                    deg.torsion.push_back(q.diag[i]);
            }
        }
        h.degs.push_back(deg);
    }
    return h;
}

std::pair<uint64_t, uint64_t> tensor_tor1_dims(uint64_t free_rank,
                                               const std::vector<mpz_class>& torsion, RingTag k) {
    check(k.is_field(), ErrKind::Validation, "universal coefficients needs a field (k = Z rejected)");
    if (k.kind == RingTag::Q)
        return {free_rank, 0};
    uint64_t hits = 0;
    for (const auto& d : torsion)
        if (mpz_divisible_ui_p(d.get_mpz_t(), k.p))
            ++hits;
    return {free_rank + hits, hits};
}

UniversalCoefficients universal_coefficients(const HomologySummary& h, RingTag k) {
    check(h.tag.kind == RingTag::Z, ErrKind::Validation,
          "universal coefficients applies to integral homology");
    UniversalCoefficients uc;
    uc.k = k;
    uc.lo = h.lo;
    uc.hi = h.hi;
    for (const auto& d : h.degs) {
        auto [t, t1] = tensor_tor1_dims(d.free_rank, d.torsion, k);
        uc.tensor_dim.push_back(t);
        uc.tor1_dim.push_back(t1);
    }
    return uc;
}

} // namespace functorlab
