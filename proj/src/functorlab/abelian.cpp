#include "abelian.hpp"

namespace functorlab {

PresentedAb PresentedAb::from_orders(const std::vector<uint64_t>& orders) {
    PresentedAb g;
    g.rank = uint32_t(orders.size());
    g.rels = ZMat(g.rank, std::vector<mpz_class>());
    for (uint32_t i = 0; i < g.rank; ++i) {
        check(orders[i] >= 1, ErrKind::Validation, "order must be >= 1");
        for (uint32_t r = 0; r < g.rank; ++r)
            g.rels[r].push_back(r == i ? mpz_class(long(orders[i])) : mpz_class(0));
    }
    return g;
}

PresentedAb PresentedAb::free_group(uint32_t rank) {
    PresentedAb g;
    g.rank = rank;
    g.rels = ZMat(rank, std::vector<mpz_class>());
    return g;
}

bool PresentedAb::is_finite() const {
    if (rank == 0)
        return true;
    if (rels.empty() || rels[0].empty())
        return false;
    return smith_dense(rels, false).rank == rank;
}

mpz_class PresentedAb::size() const {
    if (rank == 0)
        return 1;
    if (rels.empty() || rels[0].empty())
        return 0;
    SmithForm s = smith_dense(rels, false);
    if (s.rank < rank)
        return 0;
    mpz_class n = 1;
    for (const auto& d : s.invariant_factors)
        n *= d;
    return n;
}

std::vector<uint64_t> PresentedAb::diag_orders() const {
    std::vector<uint64_t> o(rank, 0);
    size_t cols = rels.empty() ? 0 : rels[0].size();
    check(cols == rank, ErrKind::Validation, "diagonal presentation expected");
    for (uint32_t i = 0; i < rank; ++i)
        for (uint32_t j = 0; j < cols; ++j) {
            if (rels[i][j] == 0)
                continue;
            check(i == j, ErrKind::Validation, "diagonal presentation expected");
            check(rels[i][j].fits_ulong_p(), ErrKind::TooLarge, "order too large");
            o[i] = rels[i][j].get_ui();
        }
    for (uint64_t d : o)
        check(d >= 1, ErrKind::Validation, "infinite factor in element enumeration");
    return o;
}

uint64_t PresentedAb::enum_size() const {
    uint64_t n = 1;
    for (uint64_t d : diag_orders())
        n = sat_mul(n, d);
    return n;
}

std::vector<mpz_class> PresentedAb::decode_elem(uint64_t code) const {
    auto orders = diag_orders();
    std::vector<mpz_class> x(rank, 0);
    for (uint32_t i = 0; i < rank; ++i) {
        x[i] = mpz_class(long(code % orders[i]));
        code /= orders[i];
    }
    return x;
}

uint64_t PresentedAb::encode_elem(const std::vector<mpz_class>& x) const {
    auto orders = diag_orders();
    check(x.size() == rank, ErrKind::Validation, "element size mismatch");
    uint64_t code = 0;
    for (uint32_t i = rank; i-- > 0;) {
        mpz_class r;
        mpz_mod(r.get_mpz_t(), x[i].get_mpz_t(), mpz_class((unsigned long)orders[i]).get_mpz_t());
        code = code * orders[i] + r.get_ui();
    }
    return code;
}

std::vector<mpz_class> PresentedAb::add_elems(const std::vector<mpz_class>& a,
                                              const std::vector<mpz_class>& b) const {
    auto orders = diag_orders();
    std::vector<mpz_class> c(rank);
    for (uint32_t i = 0; i < rank; ++i) {
        c[i] = a[i] + b[i];
        mpz_class m((unsigned long)orders[i]);
        mpz_class r;
        mpz_mod(r.get_mpz_t(), c[i].get_mpz_t(), m.get_mpz_t());
        c[i] = r;
    }
    return c;
}

AbMap AbMap::zero(const PresentedAb& s, const PresentedAb& t) {
    AbMap f;
    f.src = s;
    f.tgt = t;
    f.m = ZMat(t.rank, std::vector<mpz_class>(s.rank, 0));
    return f;
}

AbMap AbMap::id(const PresentedAb& g) {
    AbMap f;
    f.src = g;
    f.tgt = g;
    f.m = zmat_identity(g.rank);
    return f;
}

void AbMap::validate() const {
    check(m.size() == tgt.rank, ErrKind::Validation, "AbMap row count mismatch");
    if (tgt.rank > 0)
        check(m[0].size() == src.rank || src.rank == 0, ErrKind::Validation,
              "AbMap col count mismatch");
    // relations must map into the target relation lattice
    if (src.rels.empty() || src.rels[0].empty() || tgt.rank == 0)
        return;
    ZMat img = zmat_mul(m, src.rels);
    if (tgt.rels.empty() || tgt.rels[0].empty()) {
        for (const auto& row : img)
            for (const auto& v : row)
                check(v == 0, ErrKind::Validation, "AbMap does not respect relations");
        return;
    }
    solve_z(tgt.rels, img); // throws if not solvable
}

AbMap AbMap::compose(const AbMap& then) const {
    AbMap f;
    f.src = src;
    f.tgt = then.tgt;
    f.m = ZMat(then.tgt.rank, std::vector<mpz_class>(src.rank, 0));
    for (uint32_t i = 0; i < then.tgt.rank; ++i)
        for (uint32_t t = 0; t < tgt.rank; ++t) {
            if (then.m[i][t] == 0)
                continue;
            for (uint32_t j = 0; j < src.rank; ++j)
                if (m[t][j] != 0)
                    f.m[i][j] += then.m[i][t] * m[t][j];
        }
    return f;
}

AbMap AbMap::add(const AbMap& o) const {
    AbMap f = *this;
    for (size_t i = 0; i < f.m.size(); ++i)
        for (size_t j = 0; j < f.m[i].size(); ++j)
            f.m[i][j] += o.m[i][j];
    return f;
}

bool AbMap::equals(const AbMap& o) const {
    if (tgt.rank != o.tgt.rank || src.rank != o.src.rank)
        return false;
    // difference must map every basis vector into the target relations
    ZMat d = m;
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = 0; j < d[i].size(); ++j)
            d[i][j] -= o.m[i][j];
    bool zero_rels = tgt.rels.empty() || tgt.rels[0].empty();
    if (zero_rels) {
        for (const auto& row : d)
            for (const auto& v : row)
                if (v != 0)
                    return false;
        return true;
    }
    try {
        solve_z(tgt.rels, d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<mpz_class> AbMap::apply(const std::vector<mpz_class>& x) const {
    check(x.size() == src.rank, ErrKind::Validation, "AbMap::apply size mismatch");
    std::vector<mpz_class> y(tgt.rank, 0);
    for (uint32_t i = 0; i < tgt.rank; ++i)
        for (uint32_t j = 0; j < src.rank; ++j)
            if (m[i][j] != 0)
                y[i] += m[i][j] * x[j];
    return y;
}

std::vector<mpz_class> AbHomologyAt::coords(const std::vector<mpz_class>& cycle) const {
    // express the cycle in the kernel lattice, then in the quotient
    ZMat b(cycle.size(), std::vector<mpz_class>(1));
    for (size_t i = 0; i < cycle.size(); ++i)
        b[i][0] = cycle[i];
    ZMat y = solve_z(kernel_basis, b); // throws when not a cycle
    std::vector<mpz_class> v(y.size());
    for (size_t i = 0; i < y.size(); ++i)
        v[i] = y[i][0];
    auto full = quot.coords(v);
    std::vector<mpz_class> out;
    for (uint32_t i : keep)
        out.push_back(full[i]);
    return out;
}

ZMat joint_kernel_lattice(const PresentedAb& src, const std::vector<const AbMap*>& maps) {
    const uint32_t r = src.rank;
    ZMat lat = zmat_identity(r);
    for (const AbMap* g : maps) {
        if (!g || g->tgt.rank == 0)
            continue;
        // refine: { y : G * lat * y in rels(tgt) }
        ZMat gl = zmat_mul(g->m, lat);
        const ZMat& rc = g->tgt.rels;
        size_t extra = (rc.empty() || rc[0].empty()) ? 0 : rc[0].size();
        size_t cur = lat.empty() ? 0 : lat[0].size();
        ZMat stacked(g->tgt.rank, std::vector<mpz_class>(cur + extra, 0));
        for (uint32_t i = 0; i < g->tgt.rank; ++i) {
            for (size_t j = 0; j < cur; ++j)
                stacked[i][j] = gl[i][j];
            for (size_t j = 0; j < extra; ++j)
                stacked[i][cur + j] = rc[i][j];
        }
        ZMat full_ker = kernel_z(stacked);
        size_t kd = full_ker.empty() ? 0 : full_ker[0].size();
        ZMat inner(cur, std::vector<mpz_class>(kd));
        for (size_t i = 0; i < cur; ++i)
            for (size_t j = 0; j < kd; ++j)
                inner[i][j] = full_ker[i][j];
        lat = zmat_mul(lat, inner);
    }
    return lat;
}

AbHomologyAt lattice_homology(uint32_t ambient_rank, ZMat cycle_lattice, const ZMat& rel_cols) {
    AbHomologyAt h;
    const uint32_t r = ambient_rank;
    if (r == 0)
        return h;
    h.kernel_basis = std::move(cycle_lattice);
    size_t s = h.kernel_basis.empty() ? 0 : h.kernel_basis[0].size();
    if (s == 0)
        return h;

    ZMat y;
    if (!rel_cols.empty() && !rel_cols[0].empty())
        y = solve_z(h.kernel_basis, rel_cols); // d^2 = 0 and rels-in-kernel guarantee this
    else
        y = ZMat(s, std::vector<mpz_class>());

    h.quot = z_quotient(uint32_t(s), y);
    for (uint32_t i = 0; i < h.quot.k; ++i) {
        if (h.quot.diag[i] == 1)
            continue;
        h.keep.push_back(i);
        h.orders.push_back(h.quot.diag[i]);
    }
    h.gens = ZMat(r, std::vector<mpz_class>(h.keep.size(), 0));
    for (size_t gi = 0; gi < h.keep.size(); ++gi) {
        // generator in the kernel lattice basis, then in ambient coords
        for (uint32_t i = 0; i < r; ++i) {
            mpz_class v = 0;
            for (uint32_t t = 0; t < s; ++t)
                v += h.kernel_basis[i][t] * h.quot.gen_basis[t][h.keep[gi]];
            h.gens[i][gi] = v;
        }
    }
    return h;
}

AbHomologyAt ab_homology_at(const PresentedAb& middle, const AbMap* f_in, const AbMap* g_out) {
    const uint32_t r = middle.rank;
    if (r == 0)
        return AbHomologyAt{};
    ZMat cycles = joint_kernel_lattice(middle, {g_out});
    // relations: image of f_in plus the middle group's own relations
    ZMat rel(r, std::vector<mpz_class>());
    auto push_cols = [&](const ZMat& m) {
        if (m.empty() || m[0].empty())
            return;
        for (size_t j = 0; j < m[0].size(); ++j)
            for (uint32_t i = 0; i < r; ++i)
                rel[i].push_back(m[i][j]);
    };
    if (f_in)
        push_cols(f_in->m);
    push_cols(middle.rels);
    return lattice_homology(r, std::move(cycles), rel);
}

} // namespace functorlab
