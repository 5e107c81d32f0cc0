#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "snf.hpp"

namespace functorlab {

/* Per-degree homology data. Over a field only free_rank (the dimension) is
 * populated; over Z torsion holds the invariant factors >= 2 (units dropped). */
struct HomologySummary {
    struct Deg {
        uint64_t free_rank = 0;
        std::vector<mpz_class> torsion;
        bool is_zero() const { return free_rank == 0 && torsion.empty(); }
        bool operator==(const Deg& o) const {
            return free_rank == o.free_rank && torsion == o.torsion;
        }
        std::string str() const;
    };

    RingTag tag;
    int lo = 0, hi = -1;
    std::vector<Deg> degs; // index 0 corresponds to degree lo

    const Deg& at(int n) const {
        static const Deg zero{};
        if (n < lo || n > hi)
            return zero;
        return degs[size_t(n - lo)];
    }
    std::string str() const;
};

/* Bounded complex ... -> C_{lo+1} -> C_lo -> 0 with explicit differentials
 * d_n : C_n -> C_{n-1}. Degrees outside [lo, hi] are zero. */
class ChainComplex {
  public:
    ChainComplex(RingTag tag, int lo, std::vector<uint32_t> ranks)
        : tag_(tag), lo_(lo), ranks_(std::move(ranks)) {
        diffs_.resize(ranks_.size()); // diffs_[i] = d_{lo+i} : C_{lo+i} -> C_{lo+i-1}
        for (size_t i = 0; i < ranks_.size(); ++i) {
            uint32_t target = i == 0 ? 0 : ranks_[i - 1];
            diffs_[i] = Matrix(tag_, target, ranks_[i]);
        }
    }

    RingTag tag() const { return tag_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + int(ranks_.size()) - 1; }
    uint32_t rank(int n) const {
        return (n < lo_ || n > hi()) ? 0 : ranks_[size_t(n - lo_)];
    }
    // d_n : C_n -> C_{n-1}; identically zero outside the range
    const Matrix& diff(int n) const;
    void set_diff(int n, Matrix m);

    // throws Validation naming the failing degree when d^2 != 0
    void validate() const;

    ChainComplex shifted(int by) const;

  private:
    RingTag tag_;
    int lo_;
    std::vector<uint32_t> ranks_;
    std::vector<Matrix> diffs_;
};

HomologySummary homology(const ChainComplex& c);

/* Dimensions of k (x) H_n and Tor_1^Z(k, H_n) from an integral summary. */
struct UniversalCoefficients {
    RingTag k;
    int lo = 0, hi = -1;
    std::vector<uint64_t> tensor_dim;
    std::vector<uint64_t> tor1_dim;
    uint64_t tensor_at(int n) const {
        return (n < lo || n > hi) ? 0 : tensor_dim[size_t(n - lo)];
    }
    uint64_t tor1_at(int n) const { return (n < lo || n > hi) ? 0 : tor1_dim[size_t(n - lo)]; }
};

UniversalCoefficients universal_coefficients(const HomologySummary& h, RingTag k);

// dimensions of k (x) A and Tor_1^Z(k, A) for A = Z^free + cyclic(torsion)
std::pair<uint64_t, uint64_t> tensor_tor1_dims(uint64_t free_rank,
                                               const std::vector<mpz_class>& torsion, RingTag k);

} // namespace functorlab
