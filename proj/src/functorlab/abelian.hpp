#pragma once

#include "snf.hpp"
#include "util.hpp"

namespace functorlab {

/* Finitely generated abelian group presented as Z^rank / col-span(rels).
 * A finite group with known cyclic decomposition has diagonal rels. */
struct PresentedAb {
    uint32_t rank = 0;
    ZMat rels; // rank rows; may have zero columns (free group)

    static PresentedAb from_orders(const std::vector<uint64_t>& orders);
    static PresentedAb free_group(uint32_t rank);
    bool is_finite() const;
    mpz_class size() const; // 0 if infinite

    // element enumeration for finite groups with diagonal presentation
    std::vector<uint64_t> diag_orders() const;
    uint64_t enum_size() const;
    std::vector<mpz_class> decode_elem(uint64_t code) const;
    uint64_t encode_elem(const std::vector<mpz_class>& x) const;
    std::vector<mpz_class> add_elems(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b) const;
};

/* Homomorphism given on the ambient basis; must map relations into relations. */
struct AbMap {
    PresentedAb src, tgt;
    ZMat m; // tgt.rank x src.rank

    static AbMap zero(const PresentedAb& s, const PresentedAb& t);
    static AbMap id(const PresentedAb& g);
    void validate() const;
    AbMap compose(const AbMap& then) const; // then o this
    AbMap add(const AbMap& o) const;
    bool equals(const AbMap& o) const; // as maps of presented groups
    std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;
};

/* Homology ker(g_out) / im(f_in) at the middle group, with generator
 * representatives in the ambient coordinates of the middle group and a
 * coordinate map for further cycles. Generator order 0 means a free factor. */
struct AbHomologyAt {
    std::vector<mpz_class> orders; // per generator; units already dropped
    ZMat gens;                     // middle-ambient-rank x #gens
    // internals for coords()
    ZMat kernel_basis;
    ZQuotient quot;
    std::vector<uint32_t> keep;

    std::vector<mpz_class> coords(const std::vector<mpz_class>& cycle) const;
    uint64_t free_rank() const {
        uint64_t n = 0;
        for (const auto& d : orders)
            if (d == 0)
                ++n;
        return n;
    }
    std::vector<mpz_class> torsion() const {
        std::vector<mpz_class> t;
        for (const auto& d : orders)
            if (d > 1)
                t.push_back(d);
        return t;
    }
};

/* f_in may be null (no incoming map), g_out may be null (no outgoing map). */
AbHomologyAt ab_homology_at(const PresentedAb& middle, const AbMap* f_in, const AbMap* g_out);

/* Same, but with the cycle lattice given explicitly (columns spanning a
 * sublattice of Z^ambient_rank); rel_cols are quotient relations. */
AbHomologyAt lattice_homology(uint32_t ambient_rank, ZMat cycle_lattice, const ZMat& rel_cols);

/* Basis of the joint kernel lattice of several maps out of one group. */
ZMat joint_kernel_lattice(const PresentedAb& src, const std::vector<const AbMap*>& maps);

} // namespace functorlab
