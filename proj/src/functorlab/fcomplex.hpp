#pragma once

#include "chain.hpp"
#include "field.hpp"

namespace functorlab {

/* Homology at one spot of a field complex:  ker(d_out) / im(d_in), with
 * representative cycles and a coordinate map for arbitrary cycles. */
template <class F> struct HClasses {
    uint32_t dim = 0;
    std::vector<Vec<F>> reps;      // cycle representatives
    Echelon<F> coord_ech;          // span of im(d_in) and reps, tags = rep coordinates
    uint32_t space_dim = 0;

    HClasses() : coord_ech(F{}, 0, 0) {}
    explicit HClasses(const F& k) : coord_ech(k, 0, 0) {}

    // coordinates of a cycle in the chosen basis of H
    Vec<F> coords(const F& k, const Vec<F>& cycle) const {
        Vec<F> v = cycle, tag(dim, k.zero());
        coord_ech.reduce(v, dim ? &tag : nullptr);
        for (const auto& x : v)
            check(k.is_zero(x), ErrKind::Validation,
                  "vector is not a cycle (or not in the computed span)");
        for (auto& x : tag)
            x = k.neg(x);
        return tag;
    }
};

/* d_out: space -> below (may be 0 x n), d_in: above -> space (may be n x 0) */
template <class F>
HClasses<F> homology_classes(const F& k, uint32_t space_dim, const SpMat<F>& d_out,
                             const SpMat<F>& d_in) {
    HClasses<F> h(k);
    h.space_dim = space_dim;
    if (space_dim == 0)
        return h;
    std::vector<Vec<F>> cycles;
    if (d_out.rows == 0) {
        for (uint32_t i = 0; i < space_dim; ++i) {
            Vec<F> e(space_dim, k.zero());
            e[i] = k.one();
            cycles.push_back(std::move(e));
        }
    } else {
        check(d_out.cols == space_dim, ErrKind::Validation, "homology_classes: d_out shape");
        cycles = sp_kernel(k, d_out);
    }
    // boundary span (no tags yet; reps get tagged as they are chosen)
    Echelon<F> bspan(k, space_dim);
    if (d_in.cols > 0) {
        check(d_in.rows == space_dim, ErrKind::Validation, "homology_classes: d_in shape");
        for (uint32_t c = 0; c < d_in.cols; ++c)
            bspan.insert(to_dense(k, d_in.col[c], space_dim));
    }
    std::vector<Vec<F>> reps;
    {
        Echelon<F> span(k, space_dim);
        for (const auto& r : bspan.rows())
            span.insert(r);
        for (const auto& z : cycles)
            if (span.insert(z))
                reps.push_back(z);
    }
    h.dim = uint32_t(reps.size());
    h.reps = reps;
    h.coord_ech = Echelon<F>(k, space_dim, h.dim);
    for (const auto& r : bspan.rows())
        h.coord_ech.insert(r, Vec<F>(h.dim, k.zero()));
    for (uint32_t i = 0; i < h.dim; ++i) {
        Vec<F> tag(h.dim, k.zero());
        tag[i] = k.one();
        h.coord_ech.insert(reps[i], std::move(tag));
    }
    return h;
}

/* A bounded complex of k-spaces, chain orientation: d[i] : C_i -> C_{i-1}.
 * d[0] maps to the zero space. */
template <class F> struct FComplex {
    F k;
    std::vector<uint32_t> dims;
    std::vector<SpMat<F>> d; // d[i]: dims[i] -> dims[i-1]; d[0] has 0 rows

    uint32_t dim(size_t i) const { return i < dims.size() ? dims[i] : 0; }
    const SpMat<F>& diff(size_t i) const {
        static const SpMat<F> zero{};
        return i < d.size() ? d[i] : zero;
    }
    void validate() const {
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (dims[i] == 0 || dims[i + 1] == 0)
                continue;
            SpMat<F> sq = d[i].compose(k, d[i + 1]);
            for (const auto& c : sq.col)
                for (const auto& [r, v] : c.nz)
                    check(k.is_zero(v), ErrKind::Validation,
                          "d^2 != 0 at degree " + std::to_string(i + 1));
        }
    }
    HClasses<F> homology_at(size_t i) const {
        SpMat<F> din = diff(i + 1);
        if (i + 1 >= d.size())
            din = SpMat<F>(dim(i), 0);
        SpMat<F> dout = i < d.size() ? d[i] : SpMat<F>(0, dim(i));
        if (i == 0)
            dout = SpMat<F>(0, dim(0));
        return homology_classes(k, dim(i), dout, din);
    }
    HomologySummary summary(size_t max_i) const {
        HomologySummary h;
        h.tag = k.tag();
        h.lo = 0;
        h.hi = int(max_i);
        for (size_t i = 0; i <= max_i; ++i) {
            HomologySummary::Deg deg;
            deg.free_rank = homology_at(i).dim;
            h.degs.push_back(deg);
        }
        return h;
    }
};

enum class MapVerdict { Iso, InjectiveOnly, SurjectiveOnly, Neither, NotApplicable };

inline std::string verdict_str(MapVerdict v) {
    switch (v) {
    case MapVerdict::Iso: return "iso";
    case MapVerdict::InjectiveOnly: return "injective-only";
    case MapVerdict::SurjectiveOnly: return "surjective-only";
    case MapVerdict::Neither: return "neither";
    default: return "n/a";
    }
}

/* Induced map on homology H_i(src) -> H_i(tgt) for a degreewise map that is
 * assumed (and optionally checked) to commute with differentials. */
template <class F> struct InducedMap {
    uint32_t src_dim = 0, tgt_dim = 0;
    DenseMat<F> m;
    MapVerdict verdict = MapVerdict::NotApplicable;
};

template <class F>
InducedMap<F> induced_on_homology(const F& k, const HClasses<F>& hs, const HClasses<F>& ht,
                                  const std::function<Vec<F>(const Vec<F>&)>& apply) {
    InducedMap<F> out;
    out.src_dim = hs.dim;
    out.tgt_dim = ht.dim;
    out.m = DenseMat<F>(k, ht.dim, hs.dim);
    for (uint32_t j = 0; j < hs.dim; ++j) {
        Vec<F> img = apply(hs.reps[j]);
        Vec<F> c = ht.coords(k, img);
        for (uint32_t i = 0; i < ht.dim; ++i)
            out.m.at(i, j) = c[i];
    }
    // rank decides the verdict
    Echelon<F> e(k, hs.dim);
    for (uint32_t i = 0; i < ht.dim; ++i) {
        Vec<F> row(hs.dim, k.zero());
        for (uint32_t j = 0; j < hs.dim; ++j)
            row[j] = out.m.at(i, j);
        e.insert(std::move(row));
    }
    uint32_t rank = e.rank();
    bool inj = rank == hs.dim, surj = rank == ht.dim;
    out.verdict = inj && surj ? MapVerdict::Iso
                 : inj        ? MapVerdict::InjectiveOnly
                 : surj       ? MapVerdict::SurjectiveOnly
                              : MapVerdict::Neither;
    return out;
}

} // namespace functorlab
