#ifndef AITKEN_RAT_POLY_HPP
#define AITKEN_RAT_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace aitken::identities {

// Univariate polynomial in y with exact rational coefficients.
// coeffs[d] is the coefficient of y^d; no trailing zeros are stored,
// so the zero polynomial has an empty coefficient vector.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(mpq_class c);
    explicit RatPoly(std::vector<mpq_class> coeffs);

    static RatPoly y();  // the monomial y

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const;  // -1 for the zero polynomial

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const mpq_class& s) const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    RatPoly pow(unsigned e) const;
    // Substitute y := y + c.
    RatPoly shift(const mpq_class& c) const;
    mpq_class eval(const mpq_class& y) const;

    std::string str() const;

  private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

}  // namespace aitken::identities

#endif
