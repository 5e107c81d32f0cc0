#include "simplicial.hpp"

#include <map>

namespace functorlab {

namespace {

/* monotone surjections [m] ->> [n] as value sequences of length m+1 */
std::vector<std::vector<uint8_t>> surjections(uint32_t m, uint32_t n) {
    std::vector<std::vector<uint8_t>> out;
    if (n > m)
        return out;
    std::vector<uint8_t> seq(m + 1, 0);
    // choose the n positions (among 1..m) where the value steps up, lex order
    std::vector<uint32_t> jumps(n);
    for (uint32_t i = 0; i < n; ++i)
        jumps[i] = i + 1;
    auto emit = [&] {
        std::fill(seq.begin(), seq.end(), 0);
        for (uint32_t j : jumps)
            for (uint32_t t = j; t <= m; ++t)
                ++seq[t];
        out.push_back(seq);
    };
    if (n == 0) {
        emit();
        return out;
    }
    while (true) {
        emit();
        // next combination
        int64_t i = int64_t(n) - 1;
        while (i >= 0 && jumps[size_t(i)] == m - (n - 1 - uint32_t(i)))
            --i;
        if (i < 0)
            break;
        ++jumps[size_t(i)];
        for (size_t t = size_t(i) + 1; t < n; ++t)
            jumps[t] = jumps[t - 1] + 1;
    }
    return out;
}

bool is_surjective_seq(const std::vector<uint8_t>& seq, uint32_t n) {
    if (seq.front() != 0 || seq.back() != n)
        return false;
    for (size_t t = 0; t + 1 < seq.size(); ++t)
        if (seq[t + 1] > seq[t] + 1)
            return false;
    return true;
}

} // namespace

uint64_t count_surjections(uint32_t m, uint32_t n) {
    if (n > m)
        return 0;
    // binomial(m, n)
    uint64_t r = 1;
    for (uint32_t i = 0; i < n; ++i)
        r = r * (m - i) / (i + 1);
    return r;
}

void SimplicialAb::validate() const {
    auto eq = [](const AbMap& a, const AbMap& b) { return a.equals(b); };
    for (uint32_t m = 1; m <= T; ++m)
        for (uint32_t i = 0; i <= m; ++i)
            face[m][i].validate();
    for (uint32_t m = 0; m + 1 <= T; ++m)
        for (uint32_t j = 0; j <= m; ++j)
            degen[m][j].validate();
    // d_i d_j = d_{j-1} d_i  (i < j)
    for (uint32_t m = 2; m <= T; ++m)
        for (uint32_t j = 1; j <= m; ++j)
            for (uint32_t i = 0; i < j; ++i)
                check(eq(face[m][j].compose(face[m - 1][i]),
                         face[m][i].compose(face[m - 1][j - 1])),
                      ErrKind::Validation, "simplicial identity dd fails");
    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (uint32_t m = 0; m + 2 <= T; ++m)
        for (uint32_t j = 0; j <= m; ++j)
            for (uint32_t i = 0; i <= j; ++i)
                check(eq(degen[m][j].compose(degen[m + 1][i]),
                         degen[m][i].compose(degen[m + 1][j + 1])),
                      ErrKind::Validation, "simplicial identity ss fails");
    // d_i s_j relations
    for (uint32_t m = 0; m + 1 <= T; ++m)
        for (uint32_t j = 0; j <= m; ++j)
            for (uint32_t i = 0; i <= m + 1; ++i) {
                AbMap lhs = degen[m][j].compose(face[m + 1][i]);
                AbMap rhs = AbMap::id(grp[m]);
                if (i < j)
                    rhs = face[m][i].compose(degen[m - 1][j - 1]);
                else if (i == j || i == j + 1)
                    rhs = AbMap::id(grp[m]);
                else
                    rhs = face[m][i - 1].compose(degen[m - 1][j]);
                check(eq(lhs, rhs), ErrKind::Validation, "simplicial identity ds fails");
            }
}

SimplicialAb em_space(const std::vector<uint64_t>& a_orders, uint32_t n, uint32_t T) {
    check(T >= 1, ErrKind::Validation, "em_space needs T >= 1");
    check(n <= T, ErrKind::Validation, "em_space needs n <= T");
    SimplicialAb x;
    x.T = T;
    x.desc = "K(A," + std::to_string(n) + ") with |A| factors";
    const uint32_t ar = uint32_t(a_orders.size());

    std::vector<std::vector<std::vector<uint8_t>>> surj(T + 1);
    std::vector<std::map<std::vector<uint8_t>, uint32_t>> index(T + 1);
    for (uint32_t m = 0; m <= T; ++m) {
        surj[m] = surjections(m, n);
        for (uint32_t s = 0; s < surj[m].size(); ++s)
            index[m][surj[m][s]] = s;
        std::vector<uint64_t> orders;
        for (size_t s = 0; s < surj[m].size(); ++s)
            for (uint64_t d : a_orders)
                orders.push_back(d);
        x.grp.push_back(PresentedAb::from_orders(orders));
    }

    auto block_map = [&](uint32_t m_from, uint32_t m_to,
                         const std::function<int64_t(const std::vector<uint8_t>&)>& target) {
        AbMap f;
        f.src = x.grp[m_from];
        f.tgt = x.grp[m_to];
        f.m = ZMat(x.grp[m_to].rank, std::vector<mpz_class>(x.grp[m_from].rank, 0));
        for (uint32_t s = 0; s < surj[m_from].size(); ++s) {
            int64_t t = target(surj[m_from][s]);
            if (t < 0)
                continue;
            for (uint32_t c = 0; c < ar; ++c)
                f.m[size_t(t) * ar + c][size_t(s) * ar + c] = 1;
        }
        return f;
    };

    x.face.resize(T + 1);
    x.degen.resize(T);
    for (uint32_t m = 1; m <= T; ++m)
        for (uint32_t i = 0; i <= m; ++i)
            x.face[m].push_back(block_map(m, m - 1, [&](const std::vector<uint8_t>& seq) {
                std::vector<uint8_t> s2;
                for (uint32_t t = 0; t < seq.size(); ++t)
                    if (t != i)
                        s2.push_back(seq[t]);
                if (!is_surjective_seq(s2, uint8_t(n)))
                    return int64_t(-1);
                return int64_t(index[m - 1].at(s2));
            }));
    for (uint32_t m = 0; m + 1 <= T; ++m)
        for (uint32_t j = 0; j <= m; ++j)
            x.degen[m].push_back(block_map(m, m + 1, [&](const std::vector<uint8_t>& seq) {
                std::vector<uint8_t> s2;
                for (uint32_t t = 0; t < seq.size(); ++t) {
                    s2.push_back(seq[t]);
                    if (t == j)
                        s2.push_back(seq[t]);
                }
                return int64_t(index[m + 1].at(s2));
            }));
    return x;
}

SimplicialAb constant_simplicial(const std::vector<uint64_t>& a_orders, uint32_t T) {
    return em_space(a_orders, 0, T);
}

namespace {

AbMap alternating_boundary(const SimplicialAb& x, uint32_t m) {
    AbMap d = AbMap::zero(x.grp[m], x.grp[m - 1]);
    for (uint32_t i = 0; i <= m; ++i) {
        const AbMap& f = x.face[m][i];
        for (uint32_t r = 0; r < d.tgt.rank; ++r)
            for (uint32_t c = 0; c < d.src.rank; ++c)
                d.m[r][c] += (i % 2 == 0 ? f.m[r][c] : -f.m[r][c]);
    }
    return d;
}

} // namespace

Homotopy homotopy_groups(const SimplicialAb& x, uint32_t max_i) {
    check(max_i + 1 <= x.T, ErrKind::Validation,
          "pi certified only up to T-1 = " + std::to_string(x.T - 1));
    Homotopy h;
    h.summary.tag = RingTag::integers();
    h.summary.lo = 0;
    h.summary.hi = int(max_i);
    std::vector<AbMap> bnd; // bnd[m-1] : X_m -> X_{m-1}
    for (uint32_t m = 1; m <= max_i + 1; ++m)
        bnd.push_back(alternating_boundary(x, m));
    for (uint32_t i = 0; i <= max_i; ++i) {
        const AbMap* in = &bnd[i];
        const AbMap* out = i == 0 ? nullptr : &bnd[i - 1];
        AbHomologyAt at = ab_homology_at(x.grp[i], in, out);
        HomologySummary::Deg deg;
        deg.free_rank = at.free_rank();
        deg.torsion = at.torsion();
        h.summary.degs.push_back(deg);
        h.at.push_back(std::move(at));
    }
    return h;
}

HomologySummary moore_homotopy(const SimplicialAb& x, uint32_t max_i) {
    check(max_i + 1 <= x.T, ErrKind::Validation, "pi certified only up to T-1");
    HomologySummary h;
    h.tag = RingTag::integers();
    h.lo = 0;
    h.hi = int(max_i);
    // N_m = intersection of ker d_i (i >= 1), differential d_0
    std::vector<ZMat> nlat(max_i + 2);
    for (uint32_t m = 0; m <= max_i + 1; ++m) {
        std::vector<const AbMap*> maps;
        if (m >= 1)
            for (uint32_t i = 1; i <= m; ++i)
                maps.push_back(&x.face[m][i]);
        nlat[m] = joint_kernel_lattice(x.grp[m], maps);
    }
    for (uint32_t i = 0; i <= max_i; ++i) {
        // cycles: N_i intersect ker d_0
        std::vector<const AbMap*> maps;
        if (i >= 1)
            for (uint32_t j = 1; j <= i; ++j)
                maps.push_back(&x.face[i][j]);
        if (i >= 1)
            maps.push_back(&x.face[i][0]);
        ZMat cycles = joint_kernel_lattice(x.grp[i], maps);
        // boundaries: d_0(N_{i+1}) plus ambient relations
        ZMat rel(x.grp[i].rank, std::vector<mpz_class>());
        ZMat b = zmat_mul(x.face[i + 1][0].m, nlat[i + 1]);
        for (size_t c = 0; b.size() && c < b[0].size(); ++c)
            for (uint32_t r = 0; r < x.grp[i].rank; ++r)
                rel[r].push_back(b[r][c]);
        const ZMat& ar = x.grp[i].rels;
        for (size_t c = 0; ar.size() && c < ar[0].size(); ++c)
            for (uint32_t r = 0; r < x.grp[i].rank; ++r)
                rel[r].push_back(ar[r][c]);
        AbHomologyAt at = lattice_homology(x.grp[i].rank, std::move(cycles), rel);
        HomologySummary::Deg deg;
        deg.free_rank = at.free_rank();
        deg.torsion = at.torsion();
        h.degs.push_back(deg);
    }
    return h;
}

SimplicialSet underlying_set(const SimplicialAb& x, uint64_t cap) {
    SimplicialSet s;
    s.T = x.T;
    for (uint32_t m = 0; m <= x.T; ++m) {
        uint64_t n = x.grp[m].enum_size();
        check(n <= cap, ErrKind::TooLarge,
              "linearization cap exceeded at degree " + std::to_string(m) + ": |X_m| = " +
                  std::to_string(n) + " > " + std::to_string(cap));
        s.size.push_back(n);
        s.zero.push_back(x.grp[m].encode_elem(std::vector<mpz_class>(x.grp[m].rank, 0)));
    }
    s.face.resize(x.T + 1);
    s.degen.resize(x.T);
    for (uint32_t m = 1; m <= x.T; ++m)
        for (uint32_t i = 0; i <= m; ++i) {
            std::vector<uint64_t> tab(s.size[m]);
            for (uint64_t e = 0; e < s.size[m]; ++e)
                tab[e] = x.grp[m - 1].encode_elem(x.face[m][i].apply(x.grp[m].decode_elem(e)));
            s.face[m].push_back(std::move(tab));
        }
    for (uint32_t m = 0; m + 1 <= x.T; ++m)
        for (uint32_t j = 0; j <= m; ++j) {
            std::vector<uint64_t> tab(s.size[m]);
            for (uint64_t e = 0; e < s.size[m]; ++e)
                tab[e] = x.grp[m + 1].encode_elem(x.degen[m][j].apply(x.grp[m].decode_elem(e)));
            s.degen[m].push_back(std::move(tab));
        }
    return s;
}

ZLinearized linearize_z(const SimplicialAb& x, uint32_t max_i, uint64_t cap) {
    check(max_i + 1 <= x.T, ErrKind::Validation, "pi certified only up to T-1");
    ZLinearized z;
    z.set = underlying_set(x, cap);
    for (uint32_t m = 0; m <= x.T; ++m)
        z.grp.push_back(PresentedAb::free_group(uint32_t(z.set.size[m])));
    for (uint32_t m = 1; m <= max_i + 1; ++m) {
        AbMap d = AbMap::zero(z.grp[m], z.grp[m - 1]);
        for (uint32_t i = 0; i <= m; ++i)
            for (uint64_t e = 0; e < z.set.size[m]; ++e)
                d.m[z.set.face[m][i][e]][e] += (i % 2 == 0 ? 1 : -1);
        z.boundary.push_back(std::move(d));
    }
    z.pi.summary.tag = RingTag::integers();
    z.pi.summary.lo = 0;
    z.pi.summary.hi = int(max_i);
    for (uint32_t i = 0; i <= max_i; ++i) {
        const AbMap* in = &z.boundary[i];
        const AbMap* out = i == 0 ? nullptr : &z.boundary[i - 1];
        AbHomologyAt at = ab_homology_at(z.grp[i], in, out);
        HomologySummary::Deg deg;
        deg.free_rank = at.free_rank();
        deg.torsion = at.torsion();
        z.pi.summary.degs.push_back(deg);
        z.pi.at.push_back(std::move(at));
    }
    return z;
}

namespace {

/* kernel and cokernel sizes of a map of finite abelian groups given by a
 * coordinate matrix (columns = images of source generators) */
std::pair<mpz_class, mpz_class> finite_map_ker_coker(const ZMat& m,
                                                     const std::vector<mpz_class>& src_orders,
                                                     const std::vector<mpz_class>& tgt_orders) {
    size_t sn = src_orders.size(), tn = tgt_orders.size();
    // kernel: x in prod Z/src with Mx = 0 mod tgt: lattice of (x, y) with Mx + Dy = 0
    mpz_class src_size = 1, ker_size = 1;
    for (const auto& d : src_orders)
        src_size *= d;
    if (sn == 0) {
        mpz_class coker = 1;
        for (const auto& d : tgt_orders)
            coker *= d;
        return {1, coker};
    }
    ZMat stacked(tn, std::vector<mpz_class>(sn + tn, 0));
    for (size_t i = 0; i < tn; ++i) {
        for (size_t j = 0; j < sn; ++j)
            stacked[i][j] = m[i][j];
        stacked[i][sn + i] = tgt_orders[i];
    }
    ZMat ker = tn ? kernel_z(stacked) : zmat_identity(uint32_t(sn));
    // project to the x block and add source relations, then measure the
    // kernel subgroup as lattice-index data
    ZMat klat(sn, std::vector<mpz_class>());
    if (!ker.empty())
        for (size_t c = 0; c < ker[0].size(); ++c)
            for (size_t r = 0; r < sn; ++r)
                klat[r].push_back(ker[r][c]);
    for (size_t i = 0; i < sn; ++i) {
        for (size_t r = 0; r < sn; ++r)
            klat[r].push_back(r == i ? src_orders[i] : 0);
    }
    // |ker| = |Z^sn / src_rels| / |Z^sn / klat| = src_size / index(klat)
    SmithForm s = smith_dense(klat, false);
    mpz_class idx = 1;
    for (const auto& d : s.invariant_factors)
        idx *= d;
    check(s.rank == sn, ErrKind::Validation, "kernel lattice must have full rank");
    ker_size = src_size / idx;
    // cokernel: Z^tn / (im M + tgt rels)
    ZMat rel(tn, std::vector<mpz_class>());
    for (size_t c = 0; sn && c < sn; ++c)
        for (size_t r = 0; r < tn; ++r)
            rel[r].push_back(m[r][c]);
    for (size_t i = 0; i < tn; ++i)
        for (size_t r = 0; r < tn; ++r)
            rel[r].push_back(r == i ? tgt_orders[i] : 0);
    mpz_class coker = 1;
    if (tn) {
        // coker = Z^tn / (im M + tgt relations)
        SmithForm s2 = smith_dense(rel, false);
        for (const auto& d : s2.invariant_factors)
            coker *= d;
        check(s2.rank == tn, ErrKind::Validation, "cokernel must be finite here");
    }
    return {ker_size, coker};
}

} // namespace

HurewiczReport hurewicz_map(const SimplicialAb& x, uint32_t max_i, uint64_t cap) {
    HurewiczReport rep;
    ZLinearized z = linearize_z(x, max_i, cap);

    // Moore-normalized generators on the X side (all faces i >= 1 vanish)
    for (uint32_t i = 0; i <= max_i; ++i) {
        HurewiczReport::Deg deg;

        std::vector<const AbMap*> maps;
        if (i >= 1) {
            for (uint32_t j = 1; j <= i; ++j)
                maps.push_back(&x.face[i][j]);
            maps.push_back(&x.face[i][0]);
        }
        ZMat cycles = joint_kernel_lattice(x.grp[i], maps);
        // boundaries d_0(N_{i+1}) + ambient rels
        std::vector<const AbMap*> nmaps;
        for (uint32_t j = 1; j <= i + 1; ++j)
            nmaps.push_back(&x.face[i + 1][j]);
        ZMat nlat = joint_kernel_lattice(x.grp[i + 1], nmaps);
        ZMat rel(x.grp[i].rank, std::vector<mpz_class>());
        ZMat b = zmat_mul(x.face[i + 1][0].m, nlat);
        for (size_t c = 0; b.size() && c < b[0].size(); ++c)
            for (uint32_t r = 0; r < x.grp[i].rank; ++r)
                rel[r].push_back(b[r][c]);
        for (size_t c = 0; x.grp[i].rels.size() && c < x.grp[i].rels[0].size(); ++c)
            for (uint32_t r = 0; r < x.grp[i].rank; ++r)
                rel[r].push_back(x.grp[i].rels[r][c]);
        AbHomologyAt src = lattice_homology(x.grp[i].rank, std::move(cycles), rel);
        const AbHomologyAt& tgt = z.pi.at[i];

        deg.src_orders = src.orders;
        deg.tgt_orders = tgt.orders;
        size_t sg = src.orders.size(), tg = tgt.orders.size();
        deg.matrix = ZMat(tg, std::vector<mpz_class>(sg, 0));

        auto h_of = [&](const std::vector<mpz_class>& elem) {
            // [x] - [0] in Z[X_i]
            std::vector<mpz_class> v(z.grp[i].rank, 0);
            uint64_t code = x.grp[i].encode_elem(elem);
            v[code] += 1;
            v[z.set.zero[i]] -= 1;
            return tgt.coords(v);
        };

        if (i == 0) {
            // h_0 is the canonical set map x -> [x]; report set-injectivity
            // (it is not additive, so no matrix is meaningful here)
            std::vector<std::vector<mpz_class>> seen;
            bool distinct = true;
            PresentedAb pi0 = PresentedAb::from_orders([&] {
                std::vector<uint64_t> o;
                for (const auto& d : src.orders)
                    o.push_back(d.get_ui());
                return o;
            }());
            for (uint64_t e = 0; e < pi0.enum_size() && distinct; ++e) {
                auto coeffs = pi0.decode_elem(e);
                std::vector<mpz_class> elem(x.grp[0].rank, 0);
                for (size_t g = 0; g < sg; ++g)
                    for (uint32_t r = 0; r < x.grp[0].rank; ++r)
                        elem[r] += coeffs[g] * src.gens[r][g];
                auto orders = x.grp[0].diag_orders();
                for (uint32_t r = 0; r < x.grp[0].rank; ++r) {
                    mpz_class md((unsigned long)orders[r]), v;
                    mpz_mod(v.get_mpz_t(), elem[r].get_mpz_t(), md.get_mpz_t());
                    elem[r] = v;
                }
                auto c = h_of(elem);
                for (const auto& old : seen)
                    if (old == c)
                        distinct = false;
                seen.push_back(c);
            }
            deg.split_injective = distinct;
            deg.additive_ok = true;
            deg.iso = false;
            rep.degs.push_back(std::move(deg));
            continue;
        }

        std::vector<std::vector<mpz_class>> gen_elems;
        for (size_t g = 0; g < sg; ++g) {
            std::vector<mpz_class> elem(x.grp[i].rank);
            for (uint32_t r = 0; r < x.grp[i].rank; ++r)
                elem[r] = src.gens[r][g];
            // reduce mod orders to an honest element
            auto orders = x.grp[i].diag_orders();
            for (uint32_t r = 0; r < x.grp[i].rank; ++r) {
                mpz_class md((unsigned long)orders[r]);
                mpz_class v;
                mpz_mod(v.get_mpz_t(), elem[r].get_mpz_t(), md.get_mpz_t());
                elem[r] = v;
            }
            gen_elems.push_back(elem);
            auto c = h_of(elem);
            for (size_t t = 0; t < tg; ++t)
                deg.matrix[t][g] = c[t];
        }

        // additivity of the induced map, spot-checked on generator pairs
        deg.additive_ok = true;
        for (size_t a = 0; a < gen_elems.size() && deg.additive_ok; ++a)
            for (size_t b2 = 0; b2 <= a && deg.additive_ok; ++b2) {
                auto sum = x.grp[i].add_elems(gen_elems[a], gen_elems[b2]);
                auto lhs = h_of(sum);
                for (size_t t = 0; t < tg; ++t) {
                    mpz_class want = deg.matrix[t][a] + deg.matrix[t][b2];
                    if (tgt.orders[t] != 0) {
                        mpz_class r1, r2;
                        mpz_mod(r1.get_mpz_t(), want.get_mpz_t(), tgt.orders[t].get_mpz_t());
                        mpz_mod(r2.get_mpz_t(), lhs[t].get_mpz_t(), tgt.orders[t].get_mpz_t());
                        if (r1 != r2)
                            deg.additive_ok = false;
                    } else if (want != lhs[t])
                        deg.additive_ok = false;
                }
            }

        auto [ker, coker] = finite_map_ker_coker(deg.matrix, src.orders, tgt.orders);
        deg.split_injective = deg.additive_ok && ker == 1;
        deg.iso = deg.split_injective && coker == 1;
        rep.degs.push_back(std::move(deg));
    }
    return rep;
}

bool k_negligible(const std::vector<uint64_t>& a_orders, RingTag k) {
    auto [t, t1] = tensor_tor1_dims(0, [&] {
        std::vector<mpz_class> v;
        for (uint64_t d : a_orders)
            v.push_back(mpz_class((unsigned long)d));
        return v;
    }(), k);
    return t == 0 && t1 == 0;
}

} // namespace functorlab
