#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nflab/arith.hpp"

namespace nflab::quadratic {

// D = d for squarefree d = 1 mod 4, D = 4d for squarefree d = 2,3 mod 4.
bool is_fundamental_discriminant(std::int64_t D);

// The squarefree d with Q(sqrt(d)) of discriminant D.
std::int64_t squarefree_root(std::int64_t D);

// All fundamental discriminants in [lo, hi], ascending.
std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi);

// Class number of the imaginary quadratic field of discriminant D < 0,
// counted as reduced positive-definite forms.
std::int64_t class_number_imaginary(std::int64_t D);

struct RealClassNumber {
  std::int64_t h = 0;         // wide class number
  std::int64_t narrow_h = 0;  // cycles of reduced indefinite forms
  bool unit_norm_negative = false;
};

// Class number of the real quadratic field of discriminant D > 0. The narrow
// class number is the cycle count of the rho operator on reduced indefinite
// forms; h = h+ when the fundamental unit has norm -1 (the principal cycle
// contains a form with leading coefficient -1), h = h+/2 otherwise.
RealClassNumber class_number_real_full(std::int64_t D);
std::int64_t class_number_real(std::int64_t D);

// Dedekind zeta coefficients a_1..a_N: split (f=1,g=2) at kronecker(D,p)=1,
// inert (f=2,g=1) at -1, ramified (e=2,f=1,g=1) at 0.
std::vector<std::int64_t> zeta_coeffs_quadratic(std::int64_t D, std::int64_t N);

// delta_i = 1 iff the i-th prime splits completely, over the first k primes.
std::vector<std::uint8_t> split_vector_quadratic(std::int64_t D, std::size_t k = 500);

// LMFDB-normalized defining polynomial: x^2 - x - (d-1)/4 for d = 1 mod 4,
// else x^2 - d.
arith::IntPolynomial defining_poly_quadratic(std::int64_t d);

// Class numbers for every fundamental discriminant in [lo, hi] with lo >= 1,
// delivered in ascending order of D. Work is split into blocks processed in
// parallel; the sink always sees discriminant order.
void real_class_number_census(std::int64_t lo, std::int64_t hi, unsigned jobs,
                              const std::function<void(std::int64_t D, std::int64_t h)>& sink);

}  // namespace nflab::quadratic
