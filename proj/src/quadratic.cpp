#include "nflab/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nflab::quadratic {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  if (n % 4 == 0) return false;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1 || D == 0) return false;
  const std::int64_t m = ((D % 4) + 4) % 4;
  if (m == 1) return is_squarefree(D);
  if (m != 0) return false;
  const std::int64_t d = D / 4;
  const std::int64_t dm = ((d % 4) + 4) % 4;
  return (dm == 2 || dm == 3) && is_squarefree(d);
}

std::int64_t squarefree_root(std::int64_t D) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("squarefree_root: not a fundamental discriminant");
  return (((D % 4) + 4) % 4 == 1) ? D : D / 4;
}

std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("fundamental_discriminants: empty range");
  std::vector<std::int64_t> out;
  // squarefree bitmap over the relevant |values|
  const std::int64_t bound = std::max(std::llabs(lo), std::llabs(hi));
  std::vector<std::uint8_t> sf(static_cast<std::size_t>(bound) + 1, 1);
  if (bound >= 0) sf[0] = 0;
  for (std::int64_t p = 2; p * p <= bound; ++p) {
    const std::int64_t pp = p * p;
    for (std::int64_t m = pp; m <= bound; m += pp) sf[static_cast<std::size_t>(m)] = 0;
  }
  auto fundamental = [&](std::int64_t D) {
    if (D == 1 || D == 0) return false;
    const std::int64_t m = ((D % 4) + 4) % 4;
    const std::int64_t a = std::llabs(D);
    if (m == 1) return sf[static_cast<std::size_t>(a)] != 0;
    if (m != 0) return false;
    const std::int64_t d = D / 4;
    const std::int64_t dm = ((d % 4) + 4) % 4;
    return (dm == 2 || dm == 3) && sf[static_cast<std::size_t>(std::llabs(d))] != 0;
  };
  for (std::int64_t D = lo; D <= hi; ++D)
    if (fundamental(D)) out.push_back(D);
  return out;
}

std::int64_t class_number_imaginary(std::int64_t D) {
  if (D >= 0 || !is_fundamental_discriminant(D))
    throw std::invalid_argument("class_number_imaginary: D must be a negative fundamental discriminant");
  // reduced forms (a,b,c): -a < b <= a <= c, with b >= 0 when a = c
  const std::int64_t absD = -D;
  std::int64_t h = 0;
  for (std::int64_t b = (absD & 1); b * b * 3 <= absD; b += 2) {
    const std::int64_t m4 = (b * b + absD) / 4;  // = a*c
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= m4; ++a) {
      if (m4 % a != 0) continue;
      const std::int64_t c = m4 / a;
      ++h;                                       // (a, b, c)
      if (b > 0 && b < a && a < c) ++h;          // (a, -b, c)
    }
  }
  return h;
}

namespace {

// One rho step on a reduced indefinite form (a, b, c) of discriminant D:
// the successor has leading coefficient c and the unique b' = -b (mod 2|c|)
// with sqrt(D) - 2|c| < b' < sqrt(D). s = floor(sqrt(D)).
struct IndefForm {
  std::int64_t a, b;
};

inline IndefForm rho_step(std::int64_t a, std::int64_t b, std::int64_t D, std::int64_t s) {
  const std::int64_t c = (b * b - D) / (4 * a);
  const std::int64_t t = 2 * std::llabs(c);
  std::int64_t r = (-b) % t;
  if (r < 0) r += t;
  const std::int64_t b2 = s - (s - r) % t;
  return {c, b2};
}

}  // namespace

RealClassNumber class_number_real_full(std::int64_t D) {
  if (D <= 0 || !is_fundamental_discriminant(D))
    throw std::invalid_argument("class_number_real: D must be a positive fundamental discriminant");
  // Enumerate all reduced forms. With A = |a|, C = |c| (signs of a and c are
  // opposite), reduction is exactly |A - C| < b and b^2 + 4AC = D, which
  // forces A + C < sqrt(D).
  const std::int64_t s = isqrt64(D);
  std::vector<IndefForm> forms;
  for (std::int64_t A = 1; A < s; ++A) {
    for (std::int64_t C = 1; A + C <= s; ++C) {
      const std::int64_t rem = D - 4 * A * C;
      if (rem <= 0) break;
      const std::int64_t b = isqrt64(rem);
      if (b * b != rem) continue;
      if (b <= std::llabs(A - C)) continue;
      forms.push_back({A, b});
      forms.push_back({-A, b});
    }
  }

  std::sort(forms.begin(), forms.end(),
            [](const IndefForm& x, const IndefForm& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); });
  auto find = [&](std::int64_t a, std::int64_t b) {
    auto it = std::lower_bound(forms.begin(), forms.end(), IndefForm{a, b},
                               [](const IndefForm& x, const IndefForm& y) {
                                 return x.a < y.a || (x.a == y.a && x.b < y.b);
                               });
    if (it == forms.end() || it->a != a || it->b != b)
      throw std::logic_error("class_number_real: rho left the reduced set at D=" + std::to_string(D));
    return static_cast<std::size_t>(it - forms.begin());
  };

  std::int64_t b0 = s;
  if (((b0 ^ D) & 1) != 0) --b0;  // principal form (1, b0, .)

  std::vector<std::uint8_t> visited(forms.size(), 0);
  RealClassNumber out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (visited[i]) continue;
    ++out.narrow_h;
    bool has_minus_one = false;
    bool has_principal = false;
    std::size_t j = i;
    while (!visited[j]) {
      visited[j] = 1;
      if (forms[j].a == -1) has_minus_one = true;
      if (forms[j].a == 1 && forms[j].b == b0) has_principal = true;
      const IndefForm next = rho_step(forms[j].a, forms[j].b, D, s);
      j = find(next.a, next.b);
    }
    if (has_principal) out.unit_norm_negative = has_minus_one;
  }
  if (out.unit_norm_negative) {
    out.h = out.narrow_h;
  } else {
    if (out.narrow_h % 2 != 0)
      throw std::logic_error("class_number_real: odd cycle count with unit norm +1 at D=" + std::to_string(D));
    out.h = out.narrow_h / 2;
  }
  return out;
}

std::int64_t class_number_real(std::int64_t D) { return class_number_real_full(D).h; }

std::vector<std::int64_t> zeta_coeffs_quadratic(std::int64_t D, std::int64_t N) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("zeta_coeffs_quadratic: not a fundamental discriminant");
  if (N < 1) throw std::invalid_argument("zeta_coeffs_quadratic: N must be >= 1");
  std::vector<arith::LocalEulerData> locals;
  for (auto p : arith::primes_up_to(N)) {
    arith::LocalEulerData l;
    l.p = p;
    switch (arith::kronecker(D, p)) {
      case 1:
        l.ramification_index = 1, l.residue_degree = 1, l.num_primes = 2;
        break;
      case -1:
        l.ramification_index = 1, l.residue_degree = 2, l.num_primes = 1;
        break;
      default:
        l.ramification_index = 2, l.residue_degree = 1, l.num_primes = 1;
        break;
    }
    locals.push_back(l);
  }
  return arith::euler_to_dirichlet(locals, N);
}

std::vector<std::uint8_t> split_vector_quadratic(std::int64_t D, std::size_t k) {
  if (!is_fundamental_discriminant(D))
    throw std::invalid_argument("split_vector_quadratic: not a fundamental discriminant");
  const auto primes = arith::first_primes(k);
  std::vector<std::uint8_t> delta(k);
  for (std::size_t i = 0; i < k; ++i) delta[i] = arith::kronecker(D, primes[i]) == 1 ? 1 : 0;
  return delta;
}

arith::IntPolynomial defining_poly_quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw std::invalid_argument("defining_poly_quadratic: d must be squarefree and != 0, 1");
  const std::int64_t m = ((d % 4) + 4) % 4;
  if (m == 1) return arith::IntPolynomial::from_int64({-(d - 1) / 4, -1, 1});
  return arith::IntPolynomial::from_int64({-d, 0, 1});
}

}  // namespace nflab::quadratic
