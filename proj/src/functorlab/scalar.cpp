#include "scalar.hpp"

namespace functorlab {

bool is_prime_u32(uint32_t n) {
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

RingTag RingTag::fp(uint32_t p) {
    check(is_prime_u32(p), ErrKind::Validation, "F_p needs a prime p, got " + std::to_string(p));
    return {Fp, p};
}

void Scalar::canon() {
    v_.canonicalize();
    switch (tag_.kind) {
    case RingTag::Z:
        check(v_.get_den() == 1, ErrKind::Validation, "non-integral value in Z scalar");
        break;
    case RingTag::Q:
        break;
    case RingTag::Fp: {
        check(v_.get_den() == 1, ErrKind::Validation, "non-integral value in F_p scalar");
        mpz_class r;
        mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(tag_.p).get_mpz_t());
        v_ = mpq_class(r);
        break;
    }
    }
}

Scalar Scalar::inv() const {
    check(!is_zero(), ErrKind::Validation, "inverse of zero");
    switch (tag_.kind) {
    case RingTag::Z:
        check(v_ == 1 || v_ == -1, ErrKind::Validation, "non-unit integer has no inverse");
        return *this;
    case RingTag::Q:
        return Scalar(tag_, mpq_class(1) / v_);
    default: {
        mpz_class r;
        int ok = mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(tag_.p).get_mpz_t());
        check(ok != 0, ErrKind::Validation, "non-invertible residue");
        return Scalar(tag_, r);
    }
    }
}

} // namespace functorlab
