#include "endostar/scalar.hpp"

namespace endostar {

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

std::string Scalar::str() const {
    if (im == 0) return rational_to_string(re);
    std::string s = rational_to_string(re);
    if (im > 0) s += "+";
    s += rational_to_string(im) + "i";
    return s;
}

}  // namespace endostar
