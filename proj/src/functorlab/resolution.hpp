#pragma once

#include "functor_rep.hpp"

namespace functorlab {

/* Projective resolution ... -> P_1 -> P_0 -> M -> 0 by finite direct sums of
 * standard projectives. P_i = (+)_j P^{c_{i,j}}; the basis of P_i(x) is the
 * list of pairs (j, f in C(c_{i,j}, x)) flattened in j-major order. */
template <class F> struct Resolution {
    CatPtr cat;
    F k;
    std::shared_ptr<const FunctorRep<F>> target;
    std::vector<std::vector<uint32_t>> gens;       // gens[i] = generator objects
    std::vector<std::vector<SpVec<F>>> diff;       // diff[i][j] in P_{i-1}(c_{i,j}) coords, i >= 1
    std::vector<Vec<F>> aug;                       // aug[j] in M(c_{0,j}) (dense)

    // tensor structure (set when built as a resolution of an external tensor)
    std::shared_ptr<const Resolution<F>> factor_left, factor_right;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> pq; // (p, jleft*big+jright)? see below
    std::vector<std::vector<std::array<uint32_t, 3>>> tensor_index; // per i: (p, j1, j2)

    uint32_t length() const { return uint32_t(gens.size()) - 1; }

    uint64_t pdim(uint32_t i, uint32_t x) const {
        uint64_t d = 0;
        for (uint32_t c : gens[i])
            d += cat->hom_size(c, x);
        return d;
    }
    uint64_t poffset(uint32_t i, uint32_t j, uint32_t x) const {
        uint64_t d = 0;
        for (uint32_t t = 0; t < j; ++t)
            d += cat->hom_size(gens[i][t], x);
        return d;
    }
    // basis decode: flat index at object x -> (j, f)
    std::pair<uint32_t, uint64_t> decode(uint32_t i, uint32_t x, uint64_t idx) const {
        for (uint32_t j = 0; j < gens[i].size(); ++j) {
            uint64_t h = cat->hom_size(gens[i][j], x);
            if (idx < h)
                return {j, idx};
            idx -= h;
        }
        fail(ErrKind::Validation, "resolution basis index out of range");
    }

    // action of f : x -> y on P_i, applied to a dense vector
    Vec<F> transport(uint32_t i, uint32_t x, uint32_t y, uint64_t f, const Vec<F>& v) const {
        Vec<F> out(pdim(i, y), k.zero());
        uint64_t off_x = 0, off_y = 0;
        for (uint32_t j = 0; j < gens[i].size(); ++j) {
            uint32_t cj = gens[i][j];
            uint64_t hx = cat->hom_size(cj, x), hy = cat->hom_size(cj, y);
            for (uint64_t g = 0; g < hx; ++g) {
                if (k.is_zero(v[off_x + g]))
                    continue;
                uint64_t tg = cat->compose(cj, x, y, g, f);
                out[off_y + tg] = k.add(out[off_y + tg], v[off_x + g]);
            }
            off_x += hx;
            off_y += hy;
        }
        return out;
    }

    // evaluate the differential at object x as a sparse matrix
    SpMat<F> diff_at(uint32_t i, uint32_t x) const {
        SpMat<F> m(uint32_t(pdim(i - 1, x)), uint32_t(pdim(i, x)));
        uint64_t off = 0;
        for (uint32_t j = 0; j < gens[i].size(); ++j) {
            uint32_t cj = gens[i][j];
            for (uint64_t f = 0; f < cat->hom_size(cj, x); ++f) {
                // image = P_{i-1}(f)(diff[i][j])
                for (const auto& [idx, coeff] : diff[i][j].nz) {
                    auto [j2, g] = decode(i - 1, cj, idx);
                    uint64_t tg = cat->compose(gens[i - 1][j2], cj, x, g, f);
                    m.col[off + f].push(uint32_t(poffset(i - 1, j2, x) + tg), coeff);
                }
            }
            off += cat->hom_size(cj, x);
        }
        return m;
    }

    SpMat<F> aug_at(uint32_t x) const {
        SpMat<F> m(uint32_t(target->dim(x)), uint32_t(pdim(0, x)));
        uint64_t off = 0;
        for (uint32_t j = 0; j < gens[0].size(); ++j) {
            uint32_t cj = gens[0][j];
            for (uint64_t f = 0; f < cat->hom_size(cj, x); ++f) {
                SpMat<F> act = target->act(cj, x, f);
                Vec<F> img = act.apply(k, aug[j]);
                for (uint32_t r = 0; r < img.size(); ++r)
                    if (!k.is_zero(img[r]))
                        m.col[off + f].push(r, img[r]);
            }
            off += cat->hom_size(cj, x);
        }
        return m;
    }
};

template <class F> using ResPtr = std::shared_ptr<const Resolution<F>>;

struct ResolutionOpts {
    uint32_t length = 4;
    uint64_t dim_cap = 200000;  // max dim of any P_i(x)
    uint32_t gen_cap = 4000;    // max generators per term
};

/* Greedy construction: cover by standard projectives at generator objects
 * chosen in (object weight, basis order); kernels per object; closure under
 * the generating arrows. Deterministic throughout. */
template <class F>
ResPtr<F> build_resolution(std::shared_ptr<const FunctorRep<F>> m, const ResolutionOpts& opts) {
    auto res = std::make_shared<Resolution<F>>();
    res->cat = m->cat;
    res->k = m->k;
    res->target = m;
    const Cat& c = *m->cat;
    const F k = m->k;
    const uint32_t nobj = c.n_objects();

    // object scan order: low ranks first (keeps generator hom-sets small)
    std::function<uint32_t(const Cat&, uint32_t)> weight = [&](const Cat& cc,
                                                               uint32_t o) -> uint32_t {
        if (auto pr = cc.as_product(); pr.first) {
            auto [x, y] = prod_split_obj(cc, o);
            return weight(*pr.first, x) + weight(*pr.second, y);
        }
        if (auto op = cc.as_opposite())
            return weight(*op, o);
        return o;
    };
    std::vector<uint32_t> order(nobj);
    for (uint32_t i = 0; i < nobj; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](uint32_t a, uint32_t b) { return weight(c, a) < weight(c, b); });

    auto arrows = c.generating_arrows();
    std::vector<std::vector<Arrow>> out_arrows(nobj);
    for (const auto& a : arrows)
        out_arrows[a.src].push_back(a);

    // ambient spaces and candidate vectors of the module to cover at this
    // level: M itself at level 0, kernels inside P_{level-1} afterwards
    std::vector<uint64_t> ambient(nobj);
    std::vector<std::vector<Vec<F>>> candidates(nobj);
    std::function<Vec<F>(uint32_t, uint32_t, uint64_t, const Vec<F>&)> apply_ambient =
        [m](uint32_t x, uint32_t y, uint64_t f, const Vec<F>& v) {
            return m->act(x, y, f).apply(m->k, v);
        };
    for (uint32_t o = 0; o < nobj; ++o) {
        ambient[o] = m->dim(o);
        for (uint64_t b = 0; b < m->dim(o); ++b) {
            Vec<F> e(m->dim(o), k.zero());
            e[b] = k.one();
            candidates[o].push_back(std::move(e));
        }
    }

    for (uint32_t level = 0; level <= opts.length; ++level) {
        std::vector<Echelon<F>> span;
        for (uint32_t o = 0; o < nobj; ++o)
            span.emplace_back(k, uint32_t(ambient[o]));
        std::vector<std::pair<uint32_t, Vec<F>>> gens;

        auto close = [&](uint32_t x0, Vec<F> v0) {
            std::vector<std::pair<uint32_t, Vec<F>>> work{{x0, std::move(v0)}};
            while (!work.empty()) {
                auto [x, v] = std::move(work.back());
                work.pop_back();
                for (const Arrow& a : out_arrows[x]) {
                    Vec<F> w = apply_ambient(x, a.dst, a.mor, v);
                    bool nz = false;
                    for (const auto& e : w)
                        if (!k.is_zero(e)) {
                            nz = true;
                            break;
                        }
                    if (nz && span[a.dst].insert(w))
                        work.push_back({a.dst, std::move(w)});
                }
            }
        };

        for (uint32_t oi = 0; oi < nobj; ++oi) {
            uint32_t o = order[oi];
            for (const Vec<F>& v : candidates[o]) {
                if (!span[o].insert(v))
                    continue;
                gens.push_back({o, v});
                check(gens.size() <= opts.gen_cap, ErrKind::TooLarge,
                      "resolution generator cap exceeded");
                close(o, v);
            }
        }

        res->gens.emplace_back();
        for (const auto& [o, v] : gens)
            res->gens.back().push_back(o);
        if (level == 0) {
            for (const auto& [o, v] : gens)
                res->aug.push_back(v);
        } else {
            if (res->diff.size() <= level)
                res->diff.resize(level + 1);
            for (const auto& [o, v] : gens)
                res->diff[level].push_back(to_sparse(k, v));
        }
        if (level == opts.length)
            break;

        // next level: kernel of the map out of P_level at every object
        for (uint32_t o = 0; o < nobj; ++o) {
            uint64_t pd = res->pdim(level, o);
            check(pd <= opts.dim_cap, ErrKind::TooLarge,
                  "resolution dimension cap exceeded at " + c.obj_name(o) + ": " +
                      std::to_string(pd));
            SpMat<F> d = level == 0 ? res->aug_at(o) : res->diff_at(level, o);
            candidates[o] = sp_kernel(k, d);
            ambient[o] = pd;
        }
        auto resw = res;
        uint32_t lv = level;
        apply_ambient = [resw, lv](uint32_t x, uint32_t y, uint64_t f, const Vec<F>& v) {
            return resw->transport(lv, x, y, f, v);
        };
    }
    return res;
}

/* exactness spot-check: at every object, ker = im along the resolution */
template <class F> void validate_resolution(const Resolution<F>& r) {
    const Cat& c = *r.cat;
    const F& k = r.k;
    for (uint32_t x = 0; x < c.n_objects(); ++x) {
        // surjectivity of the augmentation
        SpMat<F> a = r.aug_at(x);
        check(sp_rank(k, a) == r.target->dim(x), ErrKind::Validation,
              "resolution augmentation not surjective at " + c.obj_name(x));
        for (uint32_t i = 1; i < r.gens.size(); ++i) {
            SpMat<F> din = r.diff_at(i, x);
            SpMat<F> dout = i == 1 ? r.aug_at(x) : r.diff_at(i - 1, x);
            // d o d = 0
            SpMat<F> sq = dout.compose(k, din);
            for (const auto& col : sq.col)
                for (const auto& [row, v] : col.nz)
                    check(k.is_zero(v), ErrKind::Validation, "resolution d^2 != 0");
            // exactness: rank(ker dout) = rank(din)
            uint32_t ker = uint32_t(dout.cols) - sp_rank(k, dout);
            check(ker == sp_rank(k, din), ErrKind::Validation,
                  "resolution not exact at " + c.obj_name(x) + " degree " + std::to_string(i - 1));
        }
    }
}

/* Tensor-product resolution of an external tensor M1 [x] M2 from factor
 * resolutions: Tot(Q1 [x] Q2) with the Koszul sign on the second factor. */
template <class F>
ResPtr<F> tensor_resolution(ResPtr<F> q1, ResPtr<F> q2,
                            std::shared_ptr<const FunctorRep<F>> target) {
    auto res = std::make_shared<Resolution<F>>();
    res->cat = target->cat;
    res->k = target->k;
    res->target = target;
    res->factor_left = q1;
    res->factor_right = q2;
    const F& k = res->k;
    const Cat& pc = *res->cat;
    uint32_t len = std::min(q1->length(), q2->length());

    // index layout per degree: (p, j1, j2) in lexicographic order
    res->tensor_index.resize(len + 1);
    for (uint32_t i = 0; i <= len; ++i) {
        res->gens.emplace_back();
        for (uint32_t p = 0; p <= i; ++p) {
            uint32_t q = i - p;
            if (p >= q1->gens.size() || q >= q2->gens.size())
                continue;
            for (uint32_t j1 = 0; j1 < q1->gens[p].size(); ++j1)
                for (uint32_t j2 = 0; j2 < q2->gens[i - p].size(); ++j2) {
                    res->gens.back().push_back(
                        prod_join_obj(pc, q1->gens[p][j1], q2->gens[i - p][j2]));
                    res->tensor_index[i].push_back({p, j1, j2});
                }
        }
    }
    // augmentation: m1_{j1} (x) m2_{j2}
    for (const auto& [p, j1, j2] : res->tensor_index[0]) {
        const Vec<F>& a = q1->aug[j1];
        const Vec<F>& b = q2->aug[j2];
        Vec<F> v(a.size() * b.size(), k.zero());
        for (uint32_t r = 0; r < a.size(); ++r)
            for (uint32_t s = 0; s < b.size(); ++s)
                v[size_t(r) * b.size() + s] = k.mul(a[r], b[s]);
        res->aug.push_back(std::move(v));
    }
    // differentials
    res->diff.resize(len + 1);
    for (uint32_t i = 1; i <= len; ++i) {
        // position lookup for degree i-1
        std::map<std::array<uint32_t, 3>, uint32_t> pos;
        for (uint32_t t = 0; t < res->tensor_index[i - 1].size(); ++t)
            pos[res->tensor_index[i - 1][t]] = t;
        for (const auto& [p, j1, j2] : res->tensor_index[i]) {
            uint32_t q = i - p;
            uint32_t c1 = q1->gens[p][j1], c2 = q2->gens[q][j2];
            uint32_t cobj = prod_join_obj(pc, c1, c2);
            SpVec<F> out;
            // d1 (x) 1: entries of q1->diff[p][j1] paired with (j2, id_{c2})
            if (p >= 1)
                for (const auto& [idx, coeff] : q1->diff[p][j1].nz) {
                    auto [j1p, g1] = q1->decode(p - 1, c1, idx);
                    uint32_t tpos = pos.at({p - 1, j1p, j2});
                    // flat index of (tpos, (g1, id)) in P_{i-1}(cobj)
                    uint32_t tc1 = q1->gens[p - 1][j1p];
                    uint64_t fidx = prod_join_mor(pc, prod_join_obj(pc, tc1, c2), cobj, g1,
                                                  q2->cat->identity(c2));
                    out.push(uint32_t(res->poffset(i - 1, tpos, cobj) + fidx), coeff);
                }
            // (-1)^p 1 (x) d2
            if (q >= 1)
                for (const auto& [idx, coeff] : q2->diff[q][j2].nz) {
                    auto [j2p, g2] = q2->decode(q - 1, c2, idx);
                    uint32_t tpos = pos.at({p, j1, j2p});
                    uint32_t tc2 = q2->gens[q - 1][j2p];
                    uint64_t fidx = prod_join_mor(pc, prod_join_obj(pc, c1, tc2), cobj,
                                                  q1->cat->identity(c1), g2);
                    out.push(uint32_t(res->poffset(i - 1, tpos, cobj) + fidx),
                             (p % 2 == 0) ? coeff : k.neg(coeff));
                }
            res->diff[i].push_back(std::move(out));
        }
    }
    return res;
}

} // namespace functorlab
