#pragma once

#include "abelian.hpp"
#include "chain.hpp"

namespace functorlab {

/* Truncated simplicial abelian group: degrees 0..T with finite groups,
 * all faces and degeneracies explicit. pi_i is certified only for i <= T-1. */
struct SimplicialAb {
    uint32_t T = 0;
    std::vector<PresentedAb> grp;          // 0..T, diagonal presentations
    std::vector<std::vector<AbMap>> face;  // face[m][i] : X_m -> X_{m-1}, 1 <= m <= T
    std::vector<std::vector<AbMap>> degen; // degen[m][j] : X_m -> X_{m+1}, 0 <= m < T

    void validate() const; // simplicial identities, exhaustive on the hom level
    std::string desc;
};

/* Eilenberg-MacLane model: Dold-Kan image of the complex with A placed in
 * degree n. Degree m carries one copy of A per monotone surjection [m]->>[n]. */
SimplicialAb em_space(const std::vector<uint64_t>& a_orders, uint32_t n, uint32_t T);

SimplicialAb constant_simplicial(const std::vector<uint64_t>& a_orders, uint32_t T);

uint64_t count_surjections(uint32_t m, uint32_t n); // monotone [m] ->> [n]

/* Homotopy of the associated (unnormalized) chain complex, with generator
 * representatives; degrees 0..max_i, max_i <= T-1 enforced. */
struct Homotopy {
    HomologySummary summary;
    std::vector<AbHomologyAt> at; // index = degree, coords()/gens in X_i ambient
};
Homotopy homotopy_groups(const SimplicialAb& x, uint32_t max_i);

/* Same homology from the Moore (normalized) complex; used as a cross-check. */
HomologySummary moore_homotopy(const SimplicialAb& x, uint32_t max_i);

/* Underlying simplicial set on element codes (for linearizations). */
struct SimplicialSet {
    uint32_t T = 0;
    std::vector<uint64_t> size;                        // |X_m|
    std::vector<std::vector<std::vector<uint64_t>>> face;  // [m][i][code]
    std::vector<std::vector<std::vector<uint64_t>>> degen; // [m][j][code]
    std::vector<uint64_t> zero;                        // code of 0 in each degree
};
SimplicialSet underlying_set(const SimplicialAb& x, uint64_t cap);

/* Z-linearization Z[X] as a simplicial free abelian group (basis = elements),
 * returned with its homotopy and generator data. */
struct ZLinearized {
    SimplicialSet set;
    std::vector<PresentedAb> grp; // free groups
    std::vector<AbMap> boundary;  // unnormalized differential sum (-1)^i d_i
    Homotopy pi;                  // degrees 0..max_i
};
ZLinearized linearize_z(const SimplicialAb& x, uint32_t max_i, uint64_t cap);

/* Hurewicz map pi_i X -> pi_i Z[X] with the retraction-based splitting check. */
struct HurewiczReport {
    struct Deg {
        std::vector<mpz_class> src_orders, tgt_orders;
        ZMat matrix;          // coordinates of images of pi_i X generators
        bool split_injective = false;
        bool additive_ok = true; // h(g1+g2) = h(g1)+h(g2) spot-verified
        bool iso = false;
    };
    std::vector<Deg> degs;
};
HurewiczReport hurewicz_map(const SimplicialAb& x, uint32_t max_i, uint64_t cap);

/* k (x) A = 0 and Tor_1^Z(k, A) = 0, from the cyclic orders of A. */
bool k_negligible(const std::vector<uint64_t>& a_orders, RingTag k);

} // namespace functorlab
