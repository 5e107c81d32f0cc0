#pragma once

#include "abelian.hpp"
#include "chain.hpp"
#include "finite_ring.hpp"

namespace functorlab {

/* Finite module over a finite commutative ring, on a diagonal presentation of
 * the underlying group; act[r] is the action of the ring element with code r. */
struct RMod {
    FiniteRing ring;
    PresentedAb under;       // diagonal
    std::vector<ZMat> act;   // one rank x rank matrix per ring element

    void validate() const;

    // the ring as a module over itself
    static RMod regular(const FiniteRing& r);
    // S as an R-module through a surjective ring map R -> S
    static RMod via_map(const RingMap& rm);
    // zero module
    static RMod zero(const FiniteRing& r);

    uint64_t size() const { return under.enum_size(); }
};

/* Free resolution ... -> R^{g1} -> R^{g0} -> N -> 0 with matrices over R.
 * Generator choices are greedy-minimal and deterministic. */
struct FreeResolutionZ {
    FiniteRing ring;
    std::vector<uint32_t> gens;            // g_0 .. g_len
    std::vector<std::vector<std::vector<uint32_t>>> d;
    // d[i][t][j] = ring element code: component of d_i : R^{g_i} -> R^{g_{i-1}}
};

FreeResolutionZ free_resolution_z(const RMod& n, uint32_t len);

/* Tor_i^R(M, N) over the integers, degrees 0..n_max, as integral homology
 * data (free rank always 0 here since everything is finite). */
HomologySummary ring_tor_z(const RMod& m, const RMod& n, uint32_t n_max);

/* Theorem-3.2-style criterion data for a surjective ring map R -> S:
 * T_i = Tor_i^R(S, S) over Z, then k (x) T_i and Tor_1^Z(k, T_j). */
struct ExcisionCriterion {
    HomologySummary torsion;            // T_0 .. T_{e}
    std::vector<uint64_t> k_tensor_dim; // k (x) T_i
    std::vector<uint64_t> k_tor1_dim;   // Tor_1^Z(k, T_i)
    uint32_t e = 0;
    bool satisfied = true;
    int first_violation_i = -1; // degree of the first nonzero obstruction
    std::string detail;
};

ExcisionCriterion excision_criterion(const RingMap& rm, RingTag k, uint32_t e);

} // namespace functorlab
