#include "aitken/rat_poly.hpp"

#include <sstream>

#include "aitken/exact_core.hpp"

namespace aitken::identities {

RatPoly::RatPoly(mpq_class c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RatPoly RatPoly::y() { return RatPoly(std::vector<mpq_class>{0, 1}); }

long RatPoly::degree() const {
    return static_cast<long>(coeffs_.size()) - 1;
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r = *this;
    r += o;
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly r = *this;
    r -= o;
    return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RatPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.normalize();
    return r;
}

RatPoly RatPoly::operator*(const mpq_class& s) const {
    if (s == 0) return {};
    RatPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r{mpq_class(1)};
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

RatPoly RatPoly::shift(const mpq_class& c) const {
    // (y+c)^i expanded by the binomial theorem
    RatPoly r;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        mpq_class cpow(1);
        std::vector<mpq_class> term(i + 1, mpq_class(0));
        for (std::size_t j = i + 1; j-- > 0;) {
            // coefficient of y^j in (y+c)^i is C(i,i-j) c^{i-j}
            term[j] = coeffs_[i] * mpq_class(core::binomial(i, i - j)) * cpow;
            cpow *= c;
        }
        r += RatPoly(std::move(term));
    }
    return r;
}

mpq_class RatPoly::eval(const mpq_class& y) const {
    mpq_class acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * y + coeffs_[i];
    return acc;
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i >= 1) os << "*y";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace aitken::identities
