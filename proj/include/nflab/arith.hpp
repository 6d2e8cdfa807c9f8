#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace nflab::arith {

// All primes <= n, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

// The first k primes, ascending (the 500th is 3571).
std::vector<std::int64_t> first_primes(std::size_t k);

// Full Kronecker symbol (a|n), extended to n <= 0 and even n.
int kronecker(std::int64_t a, std::int64_t n);

// Monic polynomial with integer coefficients, stored ascending c0..cn.
// Coefficients are arbitrary precision: defining polynomials of degree-8
// fields carry constant terms beyond 10^17 and their discriminants are far
// larger still.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  static IntPolynomial from_int64(const std::vector<std::int64_t>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

// Discriminant of a monic polynomial, (-1)^{n(n-1)/2} Res(P, P'), exact.
mpz_class poly_discriminant(const IntPolynomial& p);

// Local splitting data of a rational prime in a Galois field: p factors into
// g primes of residue degree f and ramification index e, with e*f*g = n.
// `certain` is false when p divides the index [O_F : Z[alpha]], where
// factoring the defining polynomial mod p may misreport the splitting.
struct LocalEulerData {
  std::int64_t p = 0;
  int ramification_index = 1;  // e
  int residue_degree = 1;      // f
  int num_primes = 1;          // g
  bool certain = true;
};

inline bool splits_completely(const LocalEulerData& d, int n) {
  return d.ramification_index == 1 && d.residue_degree == 1 && d.num_primes == n;
}

// Splitting data of p read off the factorization of P mod p. P must define a
// Galois extension of degree n with field discriminant disc_f; poly_disc is
// poly_discriminant(P), passed in so callers can compute it once per field.
// Throws std::domain_error when an unramified prime with p not dividing the
// index exhibits factor degrees that no Galois field allows.
LocalEulerData splitting_type_mod_p(const IntPolynomial& P, std::int64_t p, int n,
                                    const mpz_class& disc_f, const mpz_class& poly_disc);

// Convenience overload computing poly_discriminant internally.
LocalEulerData splitting_type_mod_p(const IntPolynomial& P, std::int64_t p, int n,
                                    const mpz_class& disc_f);

// Dirichlet coefficients a_1..a_N of the Euler product over the given local
// data: each prime contributes (1 - p^{-f s})^{-g}, and a_n counts ideals of
// norm n. Every prime <= N must appear exactly once in `locals`.
std::vector<std::int64_t> euler_to_dirichlet(const std::vector<LocalEulerData>& locals,
                                             std::int64_t N);

}  // namespace nflab::arith
