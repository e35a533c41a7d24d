#pragma once

#include <gmpxx.h>

#include <vector>

#include "rootw/intmath.hpp"

namespace rootw {

// Integer polynomials as ascending coefficient vectors.

i64 poly_degree(const std::vector<mpz_class>& f);
std::vector<mpz_class> poly_derivative(const std::vector<mpz_class>& f);
mpz_class poly_eval(const std::vector<mpz_class>& f, const mpz_class& x);
std::vector<mpz_class> poly_shift_x(const std::vector<mpz_class>& f, const mpz_class& a);  // f(x+a)

mpz_class poly_resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g);
mpz_class poly_disc(const std::vector<mpz_class>& f);

i64 mpz_val_p(const mpz_class& n, i64 p);  // v_p(n), n != 0

}  // namespace rootw
