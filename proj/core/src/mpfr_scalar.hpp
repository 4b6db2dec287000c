#ifndef HSINFO_SRC_MPFR_SCALAR_HPP
#define HSINFO_SRC_MPFR_SCALAR_HPP

#include <mpfr.h>

#include <utility>

namespace hsinfo::detail {

// Owning mpfr_t with a fixed precision chosen at construction.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision) {
        mpfr_init2(v_, precision);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(mpfr_prec_t precision, double value) {
        mpfr_init2(v_, precision);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    ~BigFloat() { mpfr_clear(v_); }

    BigFloat(const BigFloat&) = delete;
    BigFloat& operator=(const BigFloat&) = delete;
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, other.v_);
    }
    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

private:
    mpfr_t v_;
};

}  // namespace hsinfo::detail

#endif  // HSINFO_SRC_MPFR_SCALAR_HPP
