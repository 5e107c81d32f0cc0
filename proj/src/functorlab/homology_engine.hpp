#pragma once

#include "bar.hpp"
#include "resolution.hpp"

namespace functorlab {

/* ---------- contractions ---------- */

/* Splitting-based contraction of the augmented complex P_*(x) -> M(x) -> 0:
 * eta : M(x) -> P_0(x) and h_i : P_i(x) -> P_{i+1}(x) with exact identities
 * eps.eta = 1, d h + h d = 1 (degree > 0), d_1 h_0 + eta.eps = 1. */
template <class F> class DirectContraction {
  public:
    DirectContraction(ResPtr<F> r, uint32_t obj) : r_(std::move(r)), x_(obj) {
        const F& k = r_->k;
        uint32_t len = r_->length();
        for (uint32_t i = 0; i <= len; ++i) {
            SpMat<F> dout = i == 0 ? r_->aug_at(x_) : r_->diff_at(i, x_);
            uint32_t p = uint32_t(r_->pdim(i, x_));
            auto kerv = sp_kernel(k, dout);
            // complement: unit vectors extending the kernel span
            Echelon<F> span(k, p);
            for (const auto& v : kerv)
                span.insert(v);
            std::vector<Vec<F>> comp;
            for (uint32_t b = 0; b < p; ++b) {
                Vec<F> e(p, k.zero());
                e[b] = k.one();
                if (span.insert(e)) {
                    Vec<F> v(p, k.zero());
                    v[b] = k.one();
                    comp.push_back(std::move(v));
                }
            }
            // splitter: tags = coordinates over [kernel | complement]
            Echelon<F> splitter(k, p, p);
            {
                uint32_t t = 0;
                for (const auto& v : kerv) {
                    Vec<F> tag(p, k.zero());
                    tag[t++] = k.one();
                    splitter.insert(v, std::move(tag));
                }
                for (const auto& v : comp) {
                    Vec<F> tag(p, k.zero());
                    tag[t++] = k.one();
                    splitter.insert(v, std::move(tag));
                }
            }
            // solver for d|C : C_i -> image (a basis of ker at level i-1)
            uint32_t wdim = uint32_t(i == 0 ? r_->target->dim(x_) : r_->pdim(i - 1, x_));
            Echelon<F> solver(k, wdim, uint32_t(comp.size()));
            for (uint32_t s = 0; s < comp.size(); ++s) {
                Vec<F> img = dout.apply(k, comp[s]);
                Vec<F> tag(comp.size(), k.zero());
                tag[s] = k.one();
                solver.insert(std::move(img), std::move(tag));
            }
            kernels_.push_back(std::move(kerv));
            comps_.push_back(std::move(comp));
            splitters_.push_back(std::move(splitter));
            solvers_.push_back(std::move(solver));
        }
    }

    // sigma_i : (basis of the image of d_i) -> C_i, as "solve then combine"
    Vec<F> sigma(uint32_t i, const Vec<F>& w) const {
        const F& k = r_->k;
        Vec<F> v = w, tag(comps_[i].size(), k.zero());
        solvers_[i].reduce(v, comps_[i].empty() ? nullptr : &tag);
        for (const auto& e : v)
            check(k.is_zero(e), ErrKind::Validation, "contraction: vector not in the image");
        Vec<F> out(r_->pdim(i, x_), k.zero());
        for (uint32_t s = 0; s < comps_[i].size(); ++s) {
            if (k.is_zero(tag[s]))
                continue;
            auto coeff = k.neg(tag[s]);
            for (uint32_t t = 0; t < out.size(); ++t)
                out[t] = k.add(out[t], k.mul(coeff, comps_[i][s][t]));
        }
        return out;
    }

    Vec<F> eta(const Vec<F>& w) const { return sigma(0, w); }

    // h_i : P_i(x) -> P_{i+1}(x)
    Vec<F> h(uint32_t i, const Vec<F>& v) const {
        const F& k = r_->k;
        check(i + 1 < splitters_.size() + 0 && i + 1 <= r_->length(), ErrKind::Validation,
              "contraction degree out of range");
        // project onto the kernel part
        Vec<F> w = v, tag(v.size(), k.zero());
        splitters_[i].reduce(w, &tag);
        for (const auto& e : w)
            check(k.is_zero(e), ErrKind::Validation, "contraction split failed");
        Vec<F> vk(v.size(), k.zero());
        for (uint32_t t = 0; t < kernels_[i].size(); ++t) {
            auto coeff = k.neg(tag[t]);
            if (k.is_zero(coeff))
                continue;
            for (uint32_t s = 0; s < v.size(); ++s)
                vk[s] = k.add(vk[s], k.mul(coeff, kernels_[i][t][s]));
        }
        return sigma(i + 1, vk);
    }

  private:
    ResPtr<F> r_;
    uint32_t x_;
    std::vector<std::vector<Vec<F>>> kernels_, comps_;
    std::vector<Echelon<F>> splitters_, solvers_;
};

/* Contraction access for a resolution pulled back along phi: evaluation at a
 * source object x uses a contraction of the target resolution at phi(x).
 * Tensor-built resolutions contract through their factors. */
template <class F> class ContractionProvider {
  public:
    ContractionProvider(ResPtr<F> r) : r_(std::move(r)) {}

    Vec<F> eta(uint32_t bobj, const Vec<F>& w) const {
        if (r_->factor_left)
            return tensor_eta(bobj, w);
        return direct(bobj).eta(w);
    }
    Vec<F> h(uint32_t i, uint32_t bobj, const Vec<F>& v) const {
        if (r_->factor_left)
            return tensor_h(i, bobj, v);
        return direct(bobj).h(i, v);
    }

  private:
    const DirectContraction<F>& direct(uint32_t bobj) const {
        auto it = cache_.find(bobj);
        if (it == cache_.end())
            it = cache_.emplace(bobj, DirectContraction<F>(r_, bobj)).first;
        return it->second;
    }
    const DirectContraction<F>& factor_direct(const ResPtr<F>& f, uint32_t obj,
                                              std::map<uint32_t, DirectContraction<F>>& c) const {
        auto it = c.find(obj);
        if (it == c.end())
            it = c.emplace(obj, DirectContraction<F>(f, obj)).first;
        return it->second;
    }

    // tensor contraction h = h1 (x) 1 + eta1 eps1 (x) h2 on Tot(Q1 (x) Q2)
    Vec<F> tensor_h(uint32_t i, uint32_t bobj, const Vec<F>& v) const;
    Vec<F> tensor_eta(uint32_t bobj, const Vec<F>& w) const;

    ResPtr<F> r_;
    mutable std::map<uint32_t, DirectContraction<F>> cache_;
    mutable std::map<uint32_t, DirectContraction<F>> lcache_, rcache_;

    template <class T> friend class ContractionProviderAccess;

  public:
    // block layout helpers for the tensor case
    struct Layout {
        // per generator position t: (p, j1, j2), offsets
        std::vector<std::array<uint32_t, 3>> idx;
    };
};

/* tensor-case implementations */
template <class F>
Vec<F> ContractionProvider<F>::tensor_eta(uint32_t bobj, const Vec<F>& w) const {
    const F& k = r_->k;
    const Cat& pc = *r_->cat;
    auto [x, y] = prod_split_obj(pc, bobj);
    const auto& q1 = r_->factor_left;
    const auto& q2 = r_->factor_right;
    const auto& c1 = factor_direct(q1, x, lcache_);
    const auto& c2 = factor_direct(q2, y, rcache_);
    // w in M1(x) (x) M2(y), row-major; eta = eta1 (x) eta2
    uint64_t m1 = q1->target->dim(x), m2 = q2->target->dim(y);
    uint64_t p1 = q1->pdim(0, x), p2 = q2->pdim(0, y);
    // apply eta1 to columns
    Vec<F> mid(p1 * m2, k.zero());
    for (uint64_t col = 0; col < m2; ++col) {
        Vec<F> colv(m1, k.zero());
        for (uint64_t r = 0; r < m1; ++r)
            colv[r] = w[r * m2 + col];
        Vec<F> e = c1.eta(colv);
        for (uint64_t r = 0; r < p1; ++r)
            mid[r * m2 + col] = e[r];
    }
    // apply eta2 to rows
    Vec<F> out(p1 * p2, k.zero());
    for (uint64_t r = 0; r < p1; ++r) {
        Vec<F> rowv(m2, k.zero());
        for (uint64_t col = 0; col < m2; ++col)
            rowv[col] = mid[r * m2 + col];
        Vec<F> e = c2.eta(rowv);
        for (uint64_t col = 0; col < p2; ++col)
            out[r * p2 + col] = e[col];
    }
    // out is the (0,0) block; the full P_0 is exactly that block
    return out;
}

template <class F>
Vec<F> ContractionProvider<F>::tensor_h(uint32_t i, uint32_t bobj, const Vec<F>& v) const {
    const F& k = r_->k;
    const Cat& pc = *r_->cat;
    auto [x, y] = prod_split_obj(pc, bobj);
    const auto& q1 = r_->factor_left;
    const auto& q2 = r_->factor_right;
    const auto& c1 = factor_direct(q1, x, lcache_);
    const auto& c2 = factor_direct(q2, y, rcache_);

    // block offsets of Tot at bobj in degree d
    auto block_layout = [&](uint32_t d) {
        std::vector<std::tuple<uint32_t, uint64_t, uint64_t, uint64_t>> blocks; // (p, off, r1, r2)
        uint64_t off = 0;
        for (uint32_t p = 0; p <= d; ++p) {
            uint32_t q = d - p;
            if (p >= q1->gens.size() || q >= q2->gens.size())
                continue;
            uint64_t r1 = q1->pdim(p, x), r2 = q2->pdim(q, y);
            blocks.push_back({p, off, r1, r2});
            off += r1 * r2;
        }
        return blocks;
    };
    auto src_blocks = block_layout(i);
    auto dst_blocks = block_layout(i + 1);
    uint64_t out_dim = 0;
    for (auto& [p, off, r1, r2] : dst_blocks)
        out_dim = off + r1 * r2;
    Vec<F> out(out_dim, k.zero());
    auto dst_off = [&](uint32_t p) -> int64_t {
        for (auto& [pp, off, r1, r2] : dst_blocks)
            if (pp == p)
                return int64_t(off);
        return -1;
    };

    for (auto& [p, off, r1, r2] : src_blocks) {
        uint32_t q = i - p;
        // h1 (x) 1 : block (p, q) -> (p+1, q)
        if (p + 1 <= i + 1 && p < q1->length()) {
            int64_t doff = dst_off(p + 1);
            if (doff >= 0) {
                uint64_t t1 = q1->pdim(p + 1, x);
                for (uint64_t col = 0; col < r2; ++col) {
                    Vec<F> colv(r1, k.zero());
                    bool nz = false;
                    for (uint64_t r = 0; r < r1; ++r) {
                        colv[r] = v[off + r * r2 + col];
                        if (!k.is_zero(colv[r]))
                            nz = true;
                    }
                    if (!nz)
                        continue;
                    Vec<F> img = c1.h(p, colv);
                    for (uint64_t r = 0; r < t1; ++r)
                        if (!k.is_zero(img[r]))
                            out[uint64_t(doff) + r * r2 + col] =
                                k.add(out[uint64_t(doff) + r * r2 + col], img[r]);
                }
            }
        }
        // eta1 eps1 (x) h2 : block (0, q) -> (0, q+1)
        if (p == 0 && q < q2->length()) {
            int64_t doff = dst_off(0);
            if (doff >= 0) {
                uint64_t t2 = q2->pdim(q + 1, y);
                // first eps1 then eta1 on columns
                SpMat<F> eps = q1->aug_at(x);
                Vec<F> mid(r1 * r2, k.zero());
                for (uint64_t col = 0; col < r2; ++col) {
                    Vec<F> colv(r1, k.zero());
                    bool nz = false;
                    for (uint64_t r = 0; r < r1; ++r) {
                        colv[r] = v[off + r * r2 + col];
                        if (!k.is_zero(colv[r]))
                            nz = true;
                    }
                    if (!nz)
                        continue;
                    Vec<F> ev = eps.apply(k, colv);
                    Vec<F> bk = c1.eta(ev);
                    for (uint64_t r = 0; r < r1; ++r)
                        mid[r * r2 + col] = bk[r];
                }
                // then h2 on rows
                for (uint64_t r = 0; r < r1; ++r) {
                    Vec<F> rowv(r2, k.zero());
                    bool nz = false;
                    for (uint64_t col = 0; col < r2; ++col) {
                        rowv[col] = mid[r * r2 + col];
                        if (!k.is_zero(rowv[col]))
                            nz = true;
                    }
                    if (!nz)
                        continue;
                    Vec<F> img = c2.h(q, rowv);
                    for (uint64_t col = 0; col < t2; ++col)
                        if (!k.is_zero(img[col]))
                            out[uint64_t(doff) + r * t2 + col] =
                                k.add(out[uint64_t(doff) + r * t2 + col], img[col]);
                }
            }
        }
    }
    return out;
}

/* ---------- lifted chain maps between resolutions ---------- */

/* Chain map u : R_src -> phi^* R_tgt over theta : M_src -> phi^* M_tgt,
 * computed with the contraction (u_0 = eta.theta.aug, u_i = h(u_{i-1} d)).
 * u[i][j] is dense in the R_tgt-layout at phi(c_{i,j}). */
template <class F> struct LiftedMap {
    AddFunctorPtr phi;
    ResPtr<F> src, tgt;
    std::vector<std::vector<Vec<F>>> u;
};

template <class F>
LiftedMap<F> lift_resolution_map(ResPtr<F> src, ResPtr<F> tgt, AddFunctorPtr phi,
                                 const std::function<Vec<F>(uint32_t, const Vec<F>&)>& theta,
                                 uint32_t up_to) {
    LiftedMap<F> lm;
    lm.phi = phi;
    lm.src = src;
    lm.tgt = tgt;
    const F& k = src->k;
    ContractionProvider<F> con(tgt);

    up_to = std::min({up_to, src->length(), tgt->length()});
    lm.u.resize(up_to + 1);
    for (uint32_t j = 0; j < src->gens[0].size(); ++j) {
        uint32_t bobj = phi->obj(src->gens[0][j]);
        lm.u[0].push_back(con.eta(bobj, theta(src->gens[0][j], src->aug[j])));
    }
    for (uint32_t i = 1; i <= up_to; ++i) {
        for (uint32_t j = 0; j < src->gens[i].size(); ++j) {
            uint32_t cj = src->gens[i][j];
            uint32_t bobj = phi->obj(cj);
            Vec<F> w(tgt->pdim(i - 1, bobj), k.zero());
            for (const auto& [idx, coeff] : src->diff[i][j].nz) {
                auto [j2, g] = src->decode(i - 1, cj, idx);
                // transport u_{i-1}[j2] along phi(g) : phi(c_{i-1,j2}) -> phi(c_j)
                uint64_t pg = phi->mor(src->gens[i - 1][j2], cj, g);
                Vec<F> tv = tgt->transport(i - 1, phi->obj(src->gens[i - 1][j2]), bobj, pg,
                                           lm.u[i - 1][j2]);
                for (uint32_t t = 0; t < w.size(); ++t)
                    w[t] = k.add(w[t], k.mul(coeff, tv[t]));
            }
            lm.u[i].push_back(con.h(i - 1, bobj, w));
        }
    }
    return lm;
}

/* ---------- Tor and Ext complexes from a resolution ---------- */

/* chain complex (F (x)_{k[C]} P_*)_i = (+)_j F(c_{i,j}) for F on C^op */
template <class F>
FComplex<F> tor_complex(const FunctorRep<F>& fop, const Resolution<F>& r, uint32_t n_max) {
    FComplex<F> c;
    c.k = r.k;
    const F& k = r.k;
    uint32_t top = std::min(n_max + 1, r.length());
    std::vector<std::vector<uint64_t>> off(top + 1);
    for (uint32_t i = 0; i <= top; ++i) {
        uint64_t o = 0;
        for (uint32_t cj : r.gens[i]) {
            off[i].push_back(o);
            o += fop.dim(cj);
        }
        c.dims.push_back(uint32_t(o));
    }
    c.d.resize(top + 1);
    c.d[0] = SpMat<F>(0, c.dims[0]);
    for (uint32_t i = 1; i <= top; ++i) {
        SpMat<F> m(c.dims[i - 1], c.dims[i]);
        for (uint32_t j = 0; j < r.gens[i].size(); ++j) {
            uint32_t cj = r.gens[i][j];
            for (const auto& [idx, coeff] : r.diff[i][j].nz) {
                auto [j2, g] = r.decode(i - 1, cj, idx);
                // F(g) : F(c_j) -> F(c_{i-1,j2}) (g : c_{i-1,j2} -> c_j in C)
                SpMat<F> fg = fop.act(cj, r.gens[i - 1][j2], g);
                for (uint64_t u = 0; u < fop.dim(cj); ++u)
                    for (const auto& [ru, cu] : fg.col[u].nz)
                        m.col[off[i][j] + u].push(uint32_t(off[i - 1][j2] + ru),
                                                  k.mul(coeff, cu));
            }
        }
        c.d[i] = std::move(m);
    }
    return c;
}

/* cochain complex Hom(P_*, G)^i = (+)_j G(c_{i,j}); returned as dims+deltas */
template <class F> struct ExtCochain {
    F k;
    std::vector<uint32_t> dims;
    std::vector<SpMat<F>> delta; // delta[i] : E^i -> E^{i+1}
    std::vector<std::vector<uint64_t>> off;

    HClasses<F> homology_at(uint32_t i) const {
        SpMat<F> dout = i < delta.size() ? delta[i] : SpMat<F>(0, dims[i]);
        SpMat<F> din = i == 0 ? SpMat<F>(dims[0], 0) : delta[i - 1];
        return homology_classes(k, dims[i], dout, din);
    }
};

template <class F>
ExtCochain<F> ext_cochain(const Resolution<F>& r, const FunctorRep<F>& g, uint32_t n_max) {
    ExtCochain<F> e;
    e.k = r.k;
    const F& k = r.k;
    uint32_t top = std::min(n_max + 1, r.length());
    e.off.resize(top + 1);
    for (uint32_t i = 0; i <= top; ++i) {
        uint64_t o = 0;
        for (uint32_t cj : r.gens[i]) {
            e.off[i].push_back(o);
            o += g.dim(cj);
        }
        e.dims.push_back(uint32_t(o));
    }
    e.delta.resize(top);
    for (uint32_t i = 0; i + 1 <= top; ++i) {
        SpMat<F> m(e.dims[i + 1], e.dims[i]);
        for (uint32_t j = 0; j < r.gens[i + 1].size(); ++j) {
            uint32_t cj = r.gens[i + 1][j];
            for (const auto& [idx, coeff] : r.diff[i + 1][j].nz) {
                auto [j2, gmor] = r.decode(i, cj, idx);
                // (delta xi)_j = sum coeff * G(gmor)(xi_{j2})
                SpMat<F> gg = g.act(r.gens[i][j2], cj, gmor);
                for (uint64_t s = 0; s < g.dim(r.gens[i][j2]); ++s)
                    for (const auto& [rr, cc] : gg.col[s].nz)
                        m.col[e.off[i][j2] + s].push(uint32_t(e.off[i + 1][j] + rr),
                                                     k.mul(coeff, cc));
            }
        }
        e.delta[i] = std::move(m);
    }
    return e;
}

/* ---------- engine options and top-level Tor/Ext ---------- */

struct EngineOpts {
    uint32_t n_max = 3;
    uint64_t bar_cap = 20000;     // largest bar rank handled by the bar route
    uint64_t bar_hard_cap = 2000000;
    ResolutionOpts res;
    enum class Route { Auto, Bar, Resolution } route = Route::Auto;
    BarMode mode_for(const bool reduced_both) const {
        return reduced_both ? BarMode::ReducedNormalized : BarMode::Normalized;
    }
};

template <class F> struct TorExtResult {
    HomologySummary summary;
    std::string route; // "bar" or "resolution"
};

template <class F>
TorExtResult<F> tor_over_cat(std::shared_ptr<const FunctorRep<F>> fop,
                             std::shared_ptr<const FunctorRep<F>> g, EngineOpts opts) {
    TorExtResult<F> out;
    BarMode mode = opts.mode_for(fop->is_reduced() && g->is_reduced());
    bool use_bar = opts.route != EngineOpts::Route::Resolution;
    if (opts.route == EngineOpts::Route::Auto) {
        auto est = bar_rank_estimate(*fop, *g, mode, opts.n_max + 1);
        for (uint64_t r : est)
            if (r > opts.bar_cap)
                use_bar = false;
    }
    if (use_bar) {
        auto bar = build_bar(*fop, *g, mode, opts.n_max + 1, opts.bar_hard_cap);
        FComplex<F> c = bar_to_complex(bar);
        c.validate();
        out.summary = c.summary(opts.n_max);
        out.route = "bar";
    } else {
        opts.res.length = opts.n_max + 1;
        auto r = build_resolution(g, opts.res);
        FComplex<F> c = tor_complex(*fop, *r, opts.n_max);
        c.validate();
        out.summary = c.summary(opts.n_max);
        out.route = "resolution";
    }
    return out;
}

template <class F>
TorExtResult<F> ext_over_cat(std::shared_ptr<const FunctorRep<F>> f,
                             std::shared_ptr<const FunctorRep<F>> g, EngineOpts opts) {
    TorExtResult<F> out;
    BarMode mode = opts.mode_for(f->is_reduced() && g->is_reduced());
    bool use_bar = opts.route != EngineOpts::Route::Resolution;
    if (opts.route == EngineOpts::Route::Auto) {
        auto est = bar_ext_rank_estimate(*f, *g, mode, opts.n_max + 1);
        for (uint64_t r : est)
            if (r > opts.bar_cap)
                use_bar = false;
    }
    out.summary.tag = f->k.tag();
    out.summary.lo = 0;
    out.summary.hi = int(opts.n_max);
    if (use_bar) {
        auto bar = build_bar_cochain(*f, *g, mode, opts.n_max, opts.bar_hard_cap);
        for (uint32_t i = 0; i <= opts.n_max; ++i) {
            SpMat<F> dout = bar.delta[i];
            SpMat<F> din = i == 0 ? SpMat<F>(uint32_t(bar.rank[0]), 0) : bar.delta[i - 1];
            HomologySummary::Deg d;
            d.free_rank = homology_classes(f->k, uint32_t(bar.rank[i]), dout, din).dim;
            out.summary.degs.push_back(d);
        }
        out.route = "bar";
    } else {
        opts.res.length = opts.n_max + 1;
        auto r = build_resolution(f, opts.res);
        ExtCochain<F> e = ext_cochain(*r, *g, opts.n_max);
        for (uint32_t i = 0; i <= opts.n_max; ++i) {
            HomologySummary::Deg d;
            d.free_rank = e.homology_at(i).dim;
            out.summary.degs.push_back(d);
        }
        out.route = "resolution";
    }
    return out;
}

/* ---------- comparison maps ---------- */

struct ComparisonRow {
    int degree = 0;
    uint64_t lhs_dim = 0, rhs_dim = 0;
    MapVerdict verdict = MapVerdict::NotApplicable;
};

template <class F> struct ComparisonResult {
    std::vector<ComparisonRow> rows; // per degree 0..n_max
    std::string route;
    bool all_iso(uint32_t up_to) const {
        for (const auto& r : rows)
            if (uint32_t(r.degree) <= up_to && r.verdict != MapVerdict::Iso)
                return false;
        return true;
    }
};

/* res_phi on Tor: Tor^{k[A]}(phi^*F', phi^*G) -> Tor^{k[B]}(F', G).
 * fop lives on B^op, g on B. */
template <class F>
ComparisonResult<F> tor_comparison(AddFunctorPtr phi, std::shared_ptr<const FunctorRep<F>> fop,
                                   std::shared_ptr<const FunctorRep<F>> g, EngineOpts opts) {
    const F k = g->k;
    auto fop_a = restrict_functor(phi->opposite(), fop);
    auto g_a = restrict_functor(phi, g);

    ComparisonResult<F> out;
    BarMode mode = opts.mode_for(fop->is_reduced() && g->is_reduced() && fop_a->is_reduced() &&
                                 g_a->is_reduced());
    bool use_bar = opts.route != EngineOpts::Route::Resolution;
    if (opts.route == EngineOpts::Route::Auto) {
        auto est_a = bar_rank_estimate(*fop_a, *g_a, mode, opts.n_max + 1);
        auto est_b = bar_rank_estimate(*fop, *g, mode, opts.n_max + 1);
        for (uint32_t i = 0; i <= opts.n_max + 1; ++i)
            if (est_a[i] > opts.bar_cap || est_b[i] > opts.bar_cap)
                use_bar = false;
    }
    if (use_bar) {
        out.route = "bar";
        auto bar_a = build_bar(*fop_a, *g_a, mode, opts.n_max + 1, opts.bar_hard_cap);
        auto bar_b = build_bar(*fop, *g, mode, opts.n_max + 1, opts.bar_hard_cap);
        auto maps = bar_comparison_chain_map(bar_a, bar_b, phi);
        FComplex<F> ca = bar_to_complex(bar_a), cb = bar_to_complex(bar_b);
        ca.validate();
        cb.validate();
        for (uint32_t i = 0; i <= opts.n_max; ++i) {
            auto ha = ca.homology_at(i);
            auto hb = cb.homology_at(i);
            auto ind = induced_on_homology(k, ha, hb, [&](const Vec<F>& v) {
                return maps[i].apply(k, v);
            });
            out.rows.push_back({int(i), ha.dim, hb.dim, ind.verdict});
        }
        return out;
    }

    out.route = "resolution";
    opts.res.length = opts.n_max + 1;
    auto rb = build_resolution(g, opts.res);
    auto ra = build_resolution(g_a, opts.res);
    auto theta = [](uint32_t, const Vec<F>& v) { return v; }; // phi^*G = G.phi on the nose
    auto lift = lift_resolution_map<F>(ra, rb, phi, theta, opts.n_max + 1);

    FComplex<F> ca = tor_complex(*fop_a, *ra, opts.n_max);
    FComplex<F> cb = tor_complex(*fop, *rb, opts.n_max);
    ca.validate();
    cb.validate();
    // chain map: block column for gen j of ra at degree i
    std::vector<std::vector<uint64_t>> offa(opts.n_max + 2), offb(opts.n_max + 2);
    for (uint32_t i = 0; i <= std::min<uint32_t>(opts.n_max + 1, ra->length()); ++i) {
        uint64_t o = 0;
        for (uint32_t cj : ra->gens[i]) {
            offa[i].push_back(o);
            o += fop_a->dim(cj);
        }
        o = 0;
        for (uint32_t cj : rb->gens[i]) {
            offb[i].push_back(o);
            o += fop->dim(cj);
        }
    }
    std::vector<SpMat<F>> maps;
    for (uint32_t i = 0; i <= opts.n_max; ++i) {
        SpMat<F> m(cb.dims[i], ca.dims[i]);
        for (uint32_t j = 0; j < ra->gens[i].size(); ++j) {
            uint32_t cj = ra->gens[i][j];
            uint32_t bobj = phi->obj(cj);
            // u[i][j] in the rb-layout at bobj; pair with F-action blocks
            for (uint64_t t = 0; t < lift.u[i][j].size(); ++t) {
                if (k.is_zero(lift.u[i][j][t]))
                    continue;
                auto [l, fmor] = rb->decode(i, bobj, t);
                // F(fmor) : F(bobj) -> F(d_l): fop.act(bobj, d_l, fmor)
                SpMat<F> fa = fop->act(bobj, rb->gens[i][l], fmor);
                for (uint64_t ucol = 0; ucol < fop_a->dim(cj); ++ucol)
                    for (const auto& [rr, cc] : fa.col[ucol].nz)
                        m.col[offa[i][j] + ucol].push(uint32_t(offb[i][l] + rr),
                                                      k.mul(lift.u[i][j][t], cc));
            }
        }
        maps.push_back(std::move(m));
    }
    for (uint32_t i = 0; i <= opts.n_max; ++i) {
        auto ha = ca.homology_at(i);
        auto hb = cb.homology_at(i);
        auto ind = induced_on_homology(k, ha, hb,
                                       [&](const Vec<F>& v) { return maps[i].apply(k, v); });
        out.rows.push_back({int(i), ha.dim, hb.dim, ind.verdict});
    }
    return out;
}

/* ---------- diagonal pushdown of product-category resolutions ---------- */

/* block morphism a(+)b -> a'(+)b' induced by f : a -> a', g : b -> b' */
inline uint64_t block_diag_mor(const Cat& c, uint32_t a, uint32_t b, uint32_t a2, uint32_t b2,
                               uint64_t f, uint64_t g) {
    Biprod s = c.biproduct(a, b), t = c.biproduct(a2, b2);
    uint64_t left = c.compose(s.obj, a, t.obj, s.proj1,
                              c.compose(a, a2, t.obj, f, t.inj1));
    uint64_t right = c.compose(s.obj, b, t.obj, s.proj2,
                               c.compose(b, b2, t.obj, g, t.inj2));
    return c.mor_add(s.obj, t.obj, left, right);
}

// the diagonal morphism x -> x(+)x and the sum morphism x(+)x -> x
inline uint64_t diagonal_mor(const Cat& c, uint32_t x) {
    Biprod bp = c.biproduct(x, x);
    return c.mor_add(x, bp.obj, bp.inj1, bp.inj2);
}
inline uint64_t sum_mor(const Cat& c, uint32_t x) {
    Biprod bp = c.biproduct(x, x);
    return c.mor_add(bp.obj, x, bp.proj1, bp.proj2);
}

/* Delta^* of a resolution by standard projectives P^{(a,b)} over C x C is a
 * resolution by P^{a(+)b} over C (exactness is objectwise, projectivity needs
 * a+b within the truncation; throws TruncationBound otherwise). */
template <class F>
ResPtr<F> delta_push(ResPtr<F> q, std::shared_ptr<const FunctorRep<F>> delta_target) {
    const Cat& pc = *q->cat;
    auto [c1, c2] = pc.as_product();
    check(c1 != nullptr && c1->same_as(*c2), ErrKind::Validation,
          "delta pushdown needs a square product category");
    const Cat& a = *c1;
    auto res = std::make_shared<Resolution<F>>();
    res->cat = delta_target->cat;
    res->k = q->k;
    res->target = delta_target;
    const F& k = q->k;

    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> parts(q->gens.size());
    for (uint32_t i = 0; i < q->gens.size(); ++i) {
        res->gens.emplace_back();
        for (uint32_t po : q->gens[i]) {
            auto [x, y] = prod_split_obj(pc, po);
            parts[i].push_back({x, y});
            res->gens.back().push_back(a.biproduct(x, y).obj); // throws when out of window
        }
    }
    // augmentation: value of Delta^*C at a(+)b through C(i_a, i_b)
    for (uint32_t j = 0; j < q->gens[0].size(); ++j) {
        auto [x, y] = parts[0][j];
        Biprod bp = a.biproduct(x, y);
        uint32_t from = prod_join_obj(pc, x, y);
        uint32_t to = prod_join_obj(pc, bp.obj, bp.obj);
        uint64_t m = prod_join_mor(pc, from, to, bp.inj1, bp.inj2);
        Vec<F> img = q->target->act(from, to, m).apply(k, q->aug[j]);
        res->aug.push_back(std::move(img));
    }
    // differentials: entry (j, (f, g)) becomes (j, block_diag(f, g))
    res->diff.resize(q->gens.size());
    for (uint32_t i = 1; i < q->gens.size(); ++i) {
        for (uint32_t j2 = 0; j2 < q->gens[i].size(); ++j2) {
            auto [x2, y2] = parts[i][j2];
            uint32_t pobj = prod_join_obj(pc, x2, y2);
            SpVec<F> out;
            for (const auto& [idx, coeff] : q->diff[i][j2].nz) {
                auto [j, fg] = q->decode(i - 1, pobj, idx);
                auto [x1, y1] = parts[i - 1][j];
                auto [f, g] = prod_split_mor(pc, prod_join_obj(pc, x1, y1), pobj, fg);
                uint64_t w = block_diag_mor(a, x1, y1, x2, y2, f, g);
                out.push(uint32_t(res->poffset(i - 1, j, res->gens[i][j2]) + w), coeff);
            }
            res->diff[i].push_back(std::move(out));
        }
    }
    return res;
}

/* Per-generator comparison blocks for the diagonal restriction along
 * (i_a, i_b) : (a,b) -> (a(+)b, a(+)b). For a covariant functor the block
 * maps the value at (a,b) forward; for a functor on the opposite product it
 * maps the value at the diagonal object back to (a,b). */
template <class F>
std::vector<SpMat<F>> delta_gen_blocks(const Resolution<F>& q,
                                       const FunctorRep<F>& functor, uint32_t i,
                                       bool op_side) {
    const Cat& pc = *q.cat;
    auto pr = pc.as_product();
    std::vector<SpMat<F>> blocks;
    for (uint32_t j = 0; j < q.gens[i].size(); ++j) {
        auto [x, y] = prod_split_obj(pc, q.gens[i][j]);
        Biprod bp = pr.first->biproduct(x, y);
        uint32_t from = prod_join_obj(pc, x, y);
        uint32_t to = prod_join_obj(pc, bp.obj, bp.obj);
        uint64_t m = prod_join_mor(pc, from, to, bp.inj1, bp.inj2);
        blocks.push_back(op_side ? functor.act(to, from, m) : functor.act(from, to, m));
    }
    return blocks;
}

/* res^phi on Ext: Ext_{k[B]}(F, G) -> Ext_{k[A]}(phi^*F, phi^*G). */
template <class F>
ComparisonResult<F> ext_comparison(AddFunctorPtr phi, std::shared_ptr<const FunctorRep<F>> f,
                                   std::shared_ptr<const FunctorRep<F>> g, EngineOpts opts) {
    const F k = g->k;
    auto f_a = restrict_functor(phi, f);
    auto g_a = restrict_functor(phi, g);

    ComparisonResult<F> out;
    BarMode mode =
        opts.mode_for(f->is_reduced() && g->is_reduced() && f_a->is_reduced() && g_a->is_reduced());
    bool use_bar = opts.route != EngineOpts::Route::Resolution;
    if (opts.route == EngineOpts::Route::Auto) {
        auto est_a = bar_ext_rank_estimate(*f_a, *g_a, mode, opts.n_max + 1);
        auto est_b = bar_ext_rank_estimate(*f, *g, mode, opts.n_max + 1);
        for (uint32_t i = 0; i <= opts.n_max + 1; ++i)
            if (est_a[i] > opts.bar_cap || est_b[i] > opts.bar_cap)
                use_bar = false;
    }
    if (use_bar) {
        out.route = "bar";
        auto bar_b = build_bar_cochain(*f, *g, mode, opts.n_max, opts.bar_hard_cap);
        auto bar_a = build_bar_cochain(*f_a, *g_a, mode, opts.n_max, opts.bar_hard_cap);
        auto maps = bar_ext_comparison_map(bar_b, bar_a, phi);
        for (uint32_t i = 0; i <= opts.n_max; ++i) {
            SpMat<F> dout_b = bar_b.delta[i];
            SpMat<F> din_b = i == 0 ? SpMat<F>(uint32_t(bar_b.rank[0]), 0) : bar_b.delta[i - 1];
            auto hb = homology_classes(k, uint32_t(bar_b.rank[i]), dout_b, din_b);
            SpMat<F> dout_a = bar_a.delta[i];
            SpMat<F> din_a = i == 0 ? SpMat<F>(uint32_t(bar_a.rank[0]), 0) : bar_a.delta[i - 1];
            auto ha = homology_classes(k, uint32_t(bar_a.rank[i]), dout_a, din_a);
            auto ind = induced_on_homology(k, hb, ha, [&](const Vec<F>& v) {
                return maps[i].apply(k, v);
            });
            out.rows.push_back({int(i), hb.dim, ha.dim, ind.verdict});
        }
        return out;
    }

    out.route = "resolution";
    opts.res.length = opts.n_max + 1;
    auto rb = build_resolution(f, opts.res);
    auto ra = build_resolution(f_a, opts.res);
    auto theta = [](uint32_t, const Vec<F>& v) { return v; };
    auto lift = lift_resolution_map<F>(ra, rb, phi, theta, opts.n_max + 1);

    ExtCochain<F> eb = ext_cochain(*rb, *g, opts.n_max);
    ExtCochain<F> ea = ext_cochain(*ra, *g_a, opts.n_max);
    // cochain map: Hom(rb_i, G) -> Hom(ra_i, phi^*G): xi |-> xi . u_i
    std::vector<SpMat<F>> maps;
    for (uint32_t i = 0; i <= opts.n_max; ++i) {
        SpMat<F> m(ea.dims[i], eb.dims[i]);
        for (uint32_t j = 0; j < ra->gens[i].size(); ++j) {
            uint32_t cj = ra->gens[i][j];
            uint32_t bobj = phi->obj(cj);
            for (uint64_t t = 0; t < lift.u[i][j].size(); ++t) {
                if (k.is_zero(lift.u[i][j][t]))
                    continue;
                auto [l, fmor] = rb->decode(i, bobj, t);
                // contribution coeff * G(fmor)(xi_l)
                SpMat<F> gg = g->act(rb->gens[i][l], bobj, fmor);
                for (uint64_t s = 0; s < g->dim(rb->gens[i][l]); ++s)
                    for (const auto& [rr, cc] : gg.col[s].nz)
                        m.col[eb.off[i][l] + s].push(uint32_t(ea.off[i][j] + rr),
                                                     k.mul(lift.u[i][j][t], cc));
            }
        }
        maps.push_back(std::move(m));
    }
    for (uint32_t i = 0; i <= opts.n_max; ++i) {
        auto hb = eb.homology_at(i);
        auto ha = ea.homology_at(i);
        auto ind = induced_on_homology(k, hb, ha,
                                       [&](const Vec<F>& v) { return maps[i].apply(k, v); });
        out.rows.push_back({int(i), hb.dim, ha.dim, ind.verdict});
    }
    return out;
}

} // namespace functorlab
