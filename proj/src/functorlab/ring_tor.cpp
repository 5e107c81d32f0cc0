#include "ring_tor.hpp"

#include <set>

namespace functorlab {

void RMod::validate() const {
    check(act.size() == ring.size(), ErrKind::Validation, "module needs one action per element");
    const uint32_t r = under.rank;
    AbMap idm = AbMap::id(under);
    auto as_map = [&](uint32_t code) {
        AbMap f;
        f.src = under;
        f.tgt = under;
        f.m = act[code];
        return f;
    };
    for (uint32_t a = 0; a < ring.size(); ++a) {
        check(act[a].size() == r, ErrKind::Validation, "action shape");
        as_map(a).validate();
    }
    check(as_map(ring.one()).equals(idm), ErrKind::Validation, "unit must act as identity");
    for (uint32_t a = 0; a < ring.size(); ++a)
        for (uint32_t b = 0; b < ring.size(); ++b) {
            check(as_map(a).compose(as_map(b)).equals(as_map(ring.mul(a, b))),
                  ErrKind::Validation, "action not multiplicative");
            check(as_map(a).add(as_map(b)).equals(as_map(ring.add(a, b))), ErrKind::Validation,
                  "action not additive");
        }
}

RMod RMod::regular(const FiniteRing& r) {
    RMod m;
    m.ring = r;
    std::vector<uint64_t> orders;
    for (uint32_t mod : r.moduli())
        orders.push_back(mod);
    m.under = PresentedAb::from_orders(orders);
    const uint32_t k = r.n_factors();
    for (uint32_t a = 0; a < r.size(); ++a) {
        // multiplication by a on the additive coordinates is componentwise
        auto comps = r.decode(a);
        ZMat mat(k, std::vector<mpz_class>(k, 0));
        for (uint32_t i = 0; i < k; ++i)
            mat[i][i] = comps[i];
        m.act.push_back(std::move(mat));
    }
    return m;
}

RMod RMod::via_map(const RingMap& rm) {
    RMod s = regular(rm.to());
    RMod m;
    m.ring = rm.from();
    m.under = s.under;
    for (uint32_t a = 0; a < rm.from().size(); ++a)
        m.act.push_back(s.act[rm.apply(a)]);
    return m;
}

RMod RMod::zero(const FiniteRing& r) {
    RMod m;
    m.ring = r;
    m.under = PresentedAb::from_orders({});
    m.act.assign(r.size(), ZMat{});
    return m;
}

namespace {

/* greedy R-module generators of a module given by element arithmetic */
std::vector<uint64_t> module_generators(const RMod& mod) {
    const uint64_t n = mod.size();
    std::vector<uint64_t> gens;
    std::set<uint64_t> span{0};
    auto grow = [&](uint64_t g) {
        // close span under +r*g for all ring elements r
        std::vector<uint64_t> frontier;
        for (uint32_t r = 0; r < mod.ring.size(); ++r) {
            AbMap f;
            f.src = mod.under;
            f.tgt = mod.under;
            f.m = mod.act[r];
            uint64_t rg = mod.under.encode_elem(f.apply(mod.under.decode_elem(g)));
            frontier.push_back(rg);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<uint64_t> cur(span.begin(), span.end());
            for (uint64_t s : cur)
                for (uint64_t f : frontier) {
                    uint64_t t = mod.under.encode_elem(
                        mod.under.add_elems(mod.under.decode_elem(s), mod.under.decode_elem(f)));
                    if (span.insert(t).second)
                        grew = true;
                }
        }
    };
    for (uint64_t e = 0; e < n; ++e) {
        if (span.count(e))
            continue;
        gens.push_back(e);
        grow(e);
    }
    return gens;
}

/* kernel of pi : R^{g} -> prev as a presented R-module, together with the
 * inclusion data needed to read kernel elements as R-tuples */
struct KernelStep {
    RMod module;       // the kernel, diagonal presentation
    ZMat into_ambient; // ambient rank (g * #factors) x module.rank
};

KernelStep kernel_module(const RMod& prev, const std::vector<uint64_t>& gens) {
    const FiniteRing& R = prev.ring;
    const uint32_t g = uint32_t(gens.size());
    const uint32_t k = R.n_factors();
    const uint32_t arank = g * k;

    std::vector<uint64_t> aorders;
    for (uint32_t j = 0; j < g; ++j)
        for (uint32_t mod : R.moduli())
            aorders.push_back(mod);
    PresentedAb ambient = PresentedAb::from_orders(aorders);

    // pi on the ambient basis: e_{(j,i)} |-> u_i * gen_j
    ZMat pim(prev.under.rank, std::vector<mpz_class>(arank, 0));
    for (uint32_t j = 0; j < g; ++j) {
        auto gen = prev.under.decode_elem(gens[j]);
        for (uint32_t i = 0; i < k; ++i) {
            std::vector<uint32_t> unit(k, 0);
            unit[i] = 1;
            uint32_t code = R.encode(unit);
            AbMap act;
            act.src = prev.under;
            act.tgt = prev.under;
            act.m = prev.act[code];
            auto img = act.apply(gen);
            for (uint32_t r = 0; r < prev.under.rank; ++r)
                pim[r][j * k + i] = img[r];
        }
    }
    AbMap pi{ambient, prev.under, pim};

    AbHomologyAt ker = ab_homology_at(ambient, nullptr, &pi); // no incoming map: full kernel
    // ker.kernel_basis columns span the kernel lattice (ambient coords)
    const ZMat& L = ker.kernel_basis;
    size_t s = L.empty() ? 0 : L[0].size();

    // presentation of the kernel in the lattice basis: relations = ambient orders
    ZMat arels(ambient.rank, std::vector<mpz_class>());
    for (uint32_t i = 0; i < ambient.rank; ++i)
        for (uint32_t j = 0; j < ambient.rank; ++j)
            arels[j].push_back(i == j ? mpz_class((unsigned long)aorders[i]) : mpz_class(0));
    ZMat rels = s ? solve_z(L, arels) : ZMat{};

    // normalize to a diagonal presentation
    ZQuotient q = z_quotient(uint32_t(s), rels);
    std::vector<uint32_t> keep;
    std::vector<uint64_t> orders;
    for (uint32_t i = 0; i < q.k; ++i)
        if (q.diag[i] != 1) {
            check(q.diag[i] != 0, ErrKind::Validation, "kernel of finite modules must be finite");
            keep.push_back(i);
            check(q.diag[i].fits_ulong_p(), ErrKind::TooLarge, "kernel order too large");
            orders.push_back(q.diag[i].get_ui());
        }

    KernelStep out;
    out.module.ring = R;
    out.module.under = PresentedAb::from_orders(orders);
    // inclusion: kernel gen t -> ambient coords
    out.into_ambient = ZMat(ambient.rank, std::vector<mpz_class>(keep.size(), 0));
    for (size_t t = 0; t < keep.size(); ++t)
        for (uint32_t r = 0; r < ambient.rank; ++r) {
            mpz_class v = 0;
            for (size_t c = 0; c < s; ++c)
                v += L[r][c] * q.gen_basis[c][keep[t]];
            out.into_ambient[r][t] = v;
        }

    // action of each ring element, transported through the basis change
    for (uint32_t a = 0; a < R.size(); ++a) {
        // block-diagonal action on the ambient (R^g): each block is mult by a
        ZMat blk(ambient.rank, std::vector<mpz_class>(ambient.rank, 0));
        auto comps = R.decode(a);
        for (uint32_t j = 0; j < g; ++j)
            for (uint32_t i = 0; i < k; ++i)
                blk[j * k + i][j * k + i] = comps[i];
        // restrict to the kernel: coords of a * (kernel gens)
        ZMat img = zmat_mul(blk, out.into_ambient);
        ZMat in_lat = s ? solve_z(L, img) : ZMat{};
        ZMat m(orders.size(), std::vector<mpz_class>(keep.size(), 0));
        for (size_t c = 0; c < keep.size(); ++c) {
            std::vector<mpz_class> v(s);
            for (size_t r2 = 0; r2 < s; ++r2)
                v[r2] = in_lat[r2][c];
            auto full = q.coords(v);
            for (size_t t = 0; t < keep.size(); ++t)
                m[t][c] = full[keep[t]];
        }
        out.module.act.push_back(std::move(m));
    }
    return out;
}

} // namespace

FreeResolutionZ free_resolution_z(const RMod& n, uint32_t len) {
    FreeResolutionZ res;
    res.ring = n.ring;
    const uint32_t k = n.ring.n_factors();

    RMod cur = n;
    // generators of cur inside the previous free module (as ambient vectors)
    ZMat cur_into; // only meaningful from step 1 on
    for (uint32_t i = 0; i <= len; ++i) {
        auto gens = module_generators(cur);
        res.gens.push_back(uint32_t(gens.size()));
        if (i > 0) {
            // d_i entries: generator tuples of cur, read as R-coefficients
            uint32_t gprev = res.gens[i - 1];
            std::vector<std::vector<uint32_t>> mat(
                gprev, std::vector<uint32_t>(gens.size(), n.ring.zero()));
            for (size_t c = 0; c < gens.size(); ++c) {
                auto gen = cur.under.decode_elem(gens[c]);
                // ambient coords of this kernel element
                std::vector<mpz_class> amb(cur_into.size(), 0);
                for (size_t r = 0; r < cur_into.size(); ++r)
                    for (size_t t = 0; t < gen.size(); ++t)
                        amb[r] += cur_into[r][t] * gen[t];
                for (uint32_t j = 0; j < gprev; ++j) {
                    std::vector<uint32_t> comps(k);
                    for (uint32_t f = 0; f < k; ++f) {
                        uint32_t mod = n.ring.moduli()[f];
                        mpz_class r;
                        mpz_mod(r.get_mpz_t(), amb[j * k + f].get_mpz_t(),
                                mpz_class(mod).get_mpz_t());
                        comps[f] = uint32_t(r.get_ui());
                    }
                    mat[j][c] = n.ring.encode(comps);
                }
            }
            res.d.push_back(std::move(mat));
        }
        if (i == len)
            break;
        KernelStep ks = kernel_module(cur, gens);
        cur = ks.module;
        cur_into = ks.into_ambient;
    }
    return res;
}

HomologySummary ring_tor_z(const RMod& m, const RMod& n, uint32_t n_max) {
    check(m.ring == n.ring, ErrKind::Validation, "modules over different rings");
    FreeResolutionZ res = free_resolution_z(n, n_max + 1);

    // complex M^{g_i} with blocks act[d_i entries]
    std::vector<PresentedAb> terms;
    std::vector<AbMap> maps; // maps[i] : T_{i+1} -> T_i
    const uint32_t mr = m.under.rank;
    for (uint32_t i = 0; i <= n_max + 1; ++i) {
        std::vector<uint64_t> orders;
        auto base = m.under.diag_orders();
        for (uint32_t j = 0; j < res.gens[i]; ++j)
            for (uint64_t d : base)
                orders.push_back(d);
        terms.push_back(PresentedAb::from_orders(orders));
    }
    for (uint32_t i = 0; i + 1 <= n_max + 1; ++i) {
        AbMap f;
        f.src = terms[i + 1];
        f.tgt = terms[i];
        f.m = ZMat(terms[i].rank, std::vector<mpz_class>(terms[i + 1].rank, 0));
        const auto& mat = res.d[i]; // g_i x g_{i+1} ring entries
        for (uint32_t r = 0; r < res.gens[i]; ++r)
            for (uint32_t c = 0; c < res.gens[i + 1]; ++c) {
                const ZMat& blk = m.act[mat[r][c]];
                for (uint32_t x = 0; x < mr; ++x)
                    for (uint32_t y = 0; y < mr; ++y)
                        f.m[r * mr + x][c * mr + y] = blk[x][y];
            }
        maps.push_back(std::move(f));
    }

    HomologySummary h;
    h.tag = RingTag::integers();
    h.lo = 0;
    h.hi = int(n_max);
    for (uint32_t i = 0; i <= n_max; ++i) {
        const AbMap* in = &maps[i];
        const AbMap* out = i == 0 ? nullptr : &maps[i - 1];
        AbHomologyAt at = ab_homology_at(terms[i], in, out);
        HomologySummary::Deg deg;
        deg.free_rank = at.free_rank();
        deg.torsion = at.torsion();
        h.degs.push_back(deg);
    }
    return h;
}

ExcisionCriterion excision_criterion(const RingMap& rm, RingTag k, uint32_t e) {
    check(rm.is_surjective(), ErrKind::Validation, "excision criterion needs a surjective map");
    ExcisionCriterion out;
    out.e = e;
    RMod s = RMod::via_map(rm);
    uint32_t top = e; // need T_i for 0<i<e and Tor_1 on T_j for 0<j<e-1
    out.torsion = ring_tor_z(s, s, top);
    UniversalCoefficients uc = universal_coefficients(out.torsion, k);
    for (int i = 0; i <= int(top); ++i) {
        out.k_tensor_dim.push_back(uc.tensor_at(i));
        out.k_tor1_dim.push_back(uc.tor1_at(i));
    }
    for (uint32_t i = 1; i < e && out.satisfied; ++i)
        if (out.k_tensor_dim[i] != 0) {
            out.satisfied = false;
            out.first_violation_i = int(i);
            out.detail = "k (x) T_" + std::to_string(i) + " != 0";
        }
    for (uint32_t j = 1; j + 1 < e && out.satisfied; ++j)
        if (out.k_tor1_dim[j] != 0) {
            out.satisfied = false;
            out.first_violation_i = int(j);
            out.detail = "Tor_1^Z(k, T_" + std::to_string(j) + ") != 0";
        }
    return out;
}

} // namespace functorlab
