#pragma once

#include "chain.hpp"
#include "fcomplex.hpp"
#include "finite_ring.hpp"

namespace functorlab {

/* Finite-dimensional unital algebra over the coefficient field, with modules
 * given by action matrices per basis element. Used for the ring-level Tor
 * over a field base (H-unitality-style checks). */
template <class F> struct KAlgebra {
    F k;
    uint32_t dim = 0;
    Vec<F> unit;
    // mul[i*dim+j] = coordinates of e_i * e_j
    std::vector<Vec<F>> mul;
    std::string name;

    Vec<F> mul_vec(const Vec<F>& a, const Vec<F>& b) const {
        Vec<F> out(dim, k.zero());
        for (uint32_t i = 0; i < dim; ++i) {
            if (k.is_zero(a[i]))
                continue;
            for (uint32_t j = 0; j < dim; ++j) {
                if (k.is_zero(b[j]))
                    continue;
                auto c = k.mul(a[i], b[j]);
                const Vec<F>& m = mul[size_t(i) * dim + j];
                for (uint32_t t = 0; t < dim; ++t)
                    out[t] = k.add(out[t], k.mul(c, m[t]));
            }
        }
        return out;
    }

    // k[x]/x^2, basis {1, x}
    static KAlgebra dual_numbers(const F& k) {
        KAlgebra a;
        a.k = k;
        a.dim = 2;
        a.name = "k[x]/x^2";
        a.unit = {k.one(), k.zero()};
        a.mul.assign(4, Vec<F>(2, k.zero()));
        a.mul[0][0] = k.one(); // 1*1
        a.mul[1][1] = k.one(); // 1*x
        a.mul[2][1] = k.one(); // x*1
        // x*x = 0
        return a;
    }

    // R (x)_Z k for a finite ring R: one k-line per factor Z/m with char k | m
    static KAlgebra ring_tensor(const FiniteRing& r, const F& k) {
        KAlgebra a;
        a.k = k;
        a.name = r.name() + "(x)k";
        std::vector<uint32_t> keep;
        for (uint32_t i = 0; i < r.n_factors(); ++i)
            if (k.p() != 0 && r.moduli()[i] % k.p() == 0)
                keep.push_back(i);
        a.dim = uint32_t(keep.size());
        a.unit.assign(a.dim, k.one()); // image of 1 = (1,..,1)
        a.mul.assign(size_t(a.dim) * a.dim, Vec<F>(a.dim, k.zero()));
        for (uint32_t i = 0; i < a.dim; ++i)
            a.mul[size_t(i) * a.dim + i][i] = k.one(); // orthogonal idempotents
        return a;
    }
};

template <class F> struct KModule {
    uint32_t dim = 0;
    std::vector<DenseMat<F>> act; // per algebra basis element

    Vec<F> act_vec(const F& k, const KAlgebra<F>& a, const Vec<F>& alg,
                   const Vec<F>& v) const {
        Vec<F> out(dim, k.zero());
        for (uint32_t i = 0; i < a.dim; ++i) {
            if (k.is_zero(alg[i]))
                continue;
            Vec<F> t = act[i].apply(k, v);
            for (uint32_t s = 0; s < dim; ++s)
                out[s] = k.add(out[s], k.mul(alg[i], t[s]));
        }
        return out;
    }
};

/* residue module k for the dual numbers (x acts by 0) */
template <class F> KModule<F> dual_numbers_residue(const KAlgebra<F>& a) {
    KModule<F> m;
    m.dim = 1;
    DenseMat<F> one(a.k, 1, 1), zero(a.k, 1, 1);
    one.at(0, 0) = a.k.one();
    m.act = {one, zero};
    return m;
}

/* Normalized two-sided bar complex M (x) Abar^(x)n (x) N over the base field;
 * middle faces multiply and project away the unit direction. */
template <class F>
FComplex<F> algebra_bar(const KAlgebra<F>& a, const KModule<F>& m, const KModule<F>& n,
                        uint32_t n_max, uint64_t cap = 2000000) {
    const F& k = a.k;
    // complement basis of the unit line
    Echelon<F> span(k, a.dim);
    span.insert(a.unit);
    std::vector<Vec<F>> comp;
    for (uint32_t b = 0; b < a.dim; ++b) {
        Vec<F> e(a.dim, k.zero());
        e[b] = k.one();
        if (span.insert(e)) {
            Vec<F> v(a.dim, k.zero());
            v[b] = k.one();
            comp.push_back(v);
        }
    }
    uint32_t cdim = uint32_t(comp.size());
    // coordinates in (unit | complement)
    Echelon<F> coords(k, a.dim, 1 + cdim);
    {
        Vec<F> tag(1 + cdim, k.zero());
        tag[0] = k.one();
        coords.insert(a.unit, std::move(tag));
        for (uint32_t s = 0; s < cdim; ++s) {
            Vec<F> t2(1 + cdim, k.zero());
            t2[1 + s] = k.one();
            coords.insert(comp[s], std::move(t2));
        }
    }
    auto split = [&](const Vec<F>& v) {
        Vec<F> w = v, tag(1 + cdim, k.zero());
        coords.reduce(w, &tag);
        for (auto& x : tag)
            x = k.neg(x);
        return tag; // tag[0] = unit coefficient, rest complement coords
    };

    FComplex<F> c;
    c.k = k;
    for (uint32_t deg = 0; deg <= n_max + 1; ++deg) {
        uint64_t r = sat_mul(sat_mul(m.dim, n.dim), sat_pow(cdim, deg));
        check(r <= cap, ErrKind::TooLarge, "algebra bar rank over cap");
        c.dims.push_back(uint32_t(r));
    }
    c.d.resize(n_max + 2);
    c.d[0] = SpMat<F>(0, c.dims[0]);
    // basis index: ((u * cdim^deg + a_1..a_deg base-cdim) * ndim + v)
    for (uint32_t deg = 1; deg <= n_max + 1; ++deg) {
        SpMat<F> dd(c.dims[deg - 1], c.dims[deg]);
        uint64_t inner = sat_pow(cdim, deg);
        for (uint64_t u = 0; u < m.dim; ++u)
            for (uint64_t w = 0; w < inner; ++w)
                for (uint64_t v = 0; v < n.dim; ++v) {
                    uint64_t col = (u * inner + w) * n.dim + v;
                    // decode the chain letters
                    std::vector<uint32_t> letters(deg);
                    uint64_t ww = w;
                    for (uint32_t t = deg; t-- > 0;) {
                        letters[t] = uint32_t(ww % cdim);
                        ww /= cdim;
                    }
                    uint64_t inner1 = sat_pow(cdim, deg - 1);
                    auto chain_index = [&](const std::vector<uint32_t>& ls, uint64_t uu,
                                           uint64_t vv) {
                        uint64_t x = 0;
                        for (uint32_t l : ls)
                            x = x * cdim + l;
                        return (uu * inner1 + x) * n.dim + vv;
                    };
                    for (uint32_t i = 0; i <= deg; ++i) {
                        int sign = (i % 2 == 0) ? 1 : -1;
                        if (i == 0) {
                            // m . a_1
                            Vec<F> mu(m.dim, k.zero());
                            mu[u] = k.one();
                            Vec<F> img = m.act_vec(k, a, comp[letters[0]], mu);
                            std::vector<uint32_t> ls(letters.begin() + 1, letters.end());
                            for (uint32_t r2 = 0; r2 < m.dim; ++r2)
                                if (!k.is_zero(img[r2]))
                                    dd.col[col].push(uint32_t(chain_index(ls, r2, v)),
                                                     sign > 0 ? img[r2] : k.neg(img[r2]));
                        } else if (i == deg) {
                            // a_deg . n
                            Vec<F> nu(n.dim, k.zero());
                            nu[v] = k.one();
                            Vec<F> img = n.act_vec(k, a, comp[letters[deg - 1]], nu);
                            std::vector<uint32_t> ls(letters.begin(), letters.end() - 1);
                            for (uint32_t r2 = 0; r2 < n.dim; ++r2)
                                if (!k.is_zero(img[r2]))
                                    dd.col[col].push(uint32_t(chain_index(ls, u, r2)),
                                                     sign > 0 ? img[r2] : k.neg(img[r2]));
                        } else {
                            // multiply a_i a_{i+1}, project to the complement
                            Vec<F> prod = a.mul_vec(comp[letters[i - 1]], comp[letters[i]]);
                            Vec<F> tag = split(prod);
                            std::vector<uint32_t> ls;
                            for (uint32_t t = 0; t < deg; ++t)
                                if (t != i)
                                    ls.push_back(letters[t]);
                            for (uint32_t s = 0; s < cdim; ++s) {
                                if (k.is_zero(tag[1 + s]))
                                    continue;
                                ls[i - 1] = s;
                                dd.col[col].push(uint32_t(chain_index(ls, u, v)),
                                                 sign > 0 ? tag[1 + s] : k.neg(tag[1 + s]));
                            }
                        }
                    }
                }
        c.d[deg] = std::move(dd);
    }
    c.validate();
    return c;
}

/* Tor over the algebra via a free resolution with greedy minimal generators
 * (the independent oracle for the bar route). */
template <class F>
HomologySummary algebra_tor_resolution(const KAlgebra<F>& a, const KModule<F>& m,
                                       const KModule<F>& n, uint32_t n_max) {
    const F& k = a.k;
    // free resolution of n: generators g_i, differentials with entries in A
    struct Term {
        uint32_t g = 0;
        std::vector<std::vector<Vec<F>>> d; // d[row][col] in A-coordinates
    };
    // current module: subspace of A^{g_prev} (vectors dense), or n itself
    std::vector<Term> terms;
    uint32_t gcur = 0;
    std::vector<Vec<F>> kernel_basis; // in the ambient of the previous free module
    auto act_free = [&](uint32_t g, const Vec<F>& alg, const Vec<F>& v) {
        // componentwise right multiplication in A^g
        Vec<F> out(size_t(g) * a.dim, k.zero());
        for (uint32_t t = 0; t < g; ++t) {
            Vec<F> comp_v(a.dim);
            for (uint32_t s = 0; s < a.dim; ++s)
                comp_v[s] = v[size_t(t) * a.dim + s];
            Vec<F> prod = a.mul_vec(alg, comp_v);
            for (uint32_t s = 0; s < a.dim; ++s)
                out[size_t(t) * a.dim + s] = prod[s];
        }
        return out;
    };

    // level 0: generators of n
    std::vector<uint32_t> gens0;
    {
        Echelon<F> span(k, n.dim);
        for (uint32_t b = 0; b < n.dim; ++b) {
            Vec<F> e(n.dim, k.zero());
            e[b] = k.one();
            if (!span.insert(e))
                continue;
            gens0.push_back(b);
            std::vector<Vec<F>> work{e};
            while (!work.empty()) {
                Vec<F> w = std::move(work.back());
                work.pop_back();
                for (uint32_t i = 0; i < a.dim; ++i) {
                    Vec<F> alg(a.dim, k.zero());
                    alg[i] = k.one();
                    Vec<F> img = n.act_vec(k, a, alg, w);
                    if (span.insert(img))
                        work.push_back(img);
                }
            }
        }
    }
    gcur = uint32_t(gens0.size());
    // pi : A^{gcur} -> n
    auto pi_apply = [&](const Vec<F>& v) {
        Vec<F> out(n.dim, k.zero());
        for (uint32_t t = 0; t < gcur; ++t) {
            Vec<F> alg(a.dim);
            for (uint32_t s = 0; s < a.dim; ++s)
                alg[s] = v[size_t(t) * a.dim + s];
            Vec<F> e(n.dim, k.zero());
            e[gens0[t]] = k.one();
            Vec<F> img = n.act_vec(k, a, alg, e);
            for (uint32_t s = 0; s < n.dim; ++s)
                out[s] = k.add(out[s], img[s]);
        }
        return out;
    };

    std::vector<uint32_t> gcounts{gcur};
    std::vector<std::vector<std::vector<Vec<F>>>> diffs; // per level: [col][row] in A coords

    // kernel of pi
    {
        SpMat<F> pim(n.dim, gcur * a.dim);
        for (uint32_t cidx = 0; cidx < gcur * a.dim; ++cidx) {
            Vec<F> e(size_t(gcur) * a.dim, k.zero());
            e[cidx] = k.one();
            Vec<F> img = pi_apply(e);
            for (uint32_t r = 0; r < n.dim; ++r)
                if (!k.is_zero(img[r]))
                    pim.col[cidx].push(r, img[r]);
        }
        kernel_basis = sp_kernel(k, pim);
    }

    for (uint32_t level = 1; level <= n_max + 1; ++level) {
        // greedy generators of the kernel submodule inside A^{gprev}
        uint32_t gprev = gcounts.back();
        Echelon<F> span(k, uint32_t(size_t(gprev) * a.dim));
        std::vector<Vec<F>> gens;
        for (const auto& v : kernel_basis) {
            if (!span.insert(v))
                continue;
            gens.push_back(v);
            // close under the algebra action
            std::vector<Vec<F>> work{v};
            while (!work.empty()) {
                Vec<F> w = std::move(work.back());
                work.pop_back();
                for (uint32_t i = 0; i < a.dim; ++i) {
                    Vec<F> alg(a.dim, k.zero());
                    alg[i] = k.one();
                    Vec<F> img = act_free(gprev, alg, w);
                    if (span.insert(img))
                        work.push_back(img);
                }
            }
        }
        // record differential entries (A-coordinates per generator, per row)
        std::vector<std::vector<Vec<F>>> d;
        for (const auto& gvec : gens) {
            std::vector<Vec<F>> col;
            for (uint32_t t = 0; t < gprev; ++t) {
                Vec<F> av(a.dim);
                for (uint32_t s = 0; s < a.dim; ++s)
                    av[s] = gvec[size_t(t) * a.dim + s];
                col.push_back(av);
            }
            d.push_back(col);
        }
        diffs.push_back(d);
        gcounts.push_back(uint32_t(gens.size()));
        if (level == n_max + 1)
            break;
        // kernel of the new map A^{gnew} -> A^{gprev}
        uint32_t gnew = uint32_t(gens.size());
        SpMat<F> dm(uint32_t(size_t(gprev) * a.dim), uint32_t(size_t(gnew) * a.dim));
        for (uint32_t cidx = 0; cidx < gnew * a.dim; ++cidx) {
            uint32_t gi = cidx / a.dim, s = cidx % a.dim;
            Vec<F> alg(a.dim, k.zero());
            alg[s] = k.one();
            Vec<F> img = act_free(gprev, alg, gens[gi]);
            for (uint32_t r = 0; r < img.size(); ++r)
                if (!k.is_zero(img[r]))
                    dm.col[cidx].push(r, img[r]);
        }
        kernel_basis = sp_kernel(k, dm);
    }

    // tensor with m: complex m^{g_i}
    FComplex<F> c;
    c.k = k;
    for (uint32_t i = 0; i <= n_max + 1; ++i)
        c.dims.push_back(gcounts[i] * m.dim);
    c.d.resize(n_max + 2);
    c.d[0] = SpMat<F>(0, c.dims[0]);
    for (uint32_t i = 1; i <= n_max + 1; ++i) {
        SpMat<F> dm(c.dims[i - 1], c.dims[i]);
        const auto& d = diffs[i - 1];
        for (uint32_t col = 0; col < gcounts[i]; ++col)
            for (uint32_t row = 0; row < gcounts[i - 1]; ++row) {
                const Vec<F>& av = d[col][row];
                for (uint64_t s = 0; s < m.dim; ++s) {
                    Vec<F> e(m.dim, k.zero());
                    e[s] = k.one();
                    Vec<F> img = m.act_vec(k, a, av, e);
                    for (uint32_t r = 0; r < m.dim; ++r)
                        if (!k.is_zero(img[r]))
                            dm.col[size_t(col) * m.dim + s].push(uint32_t(row * m.dim + r),
                                                                 img[r]);
                }
            }
        c.d[i] = std::move(dm);
    }
    c.validate();
    return c.summary(n_max);
}

template <class F>
HomologySummary algebra_tor(const KAlgebra<F>& a, const KModule<F>& m, const KModule<F>& n,
                            uint32_t n_max) {
    return algebra_bar(a, m, n, n_max).summary(n_max);
}

} // namespace functorlab
