#include "nflab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace nflab::arith {

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i * i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  for (std::int64_t i = 2; i <= n; ++i)
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::vector<std::int64_t> first_primes(std::size_t k) {
  if (k == 0) throw std::invalid_argument("first_primes: k must be positive");
  // p_k < k (ln k + ln ln k) for k >= 6
  std::int64_t bound = 16;
  if (k >= 6) {
    const double kd = static_cast<double>(k);
    bound = static_cast<std::int64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 2;
  }
  for (;;) {
    auto primes = primes_up_to(bound);
    if (primes.size() >= k) {
      primes.resize(k);
      return primes;
    }
    bound *= 2;
  }
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && n % 2 == 0) return 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;  // (a|-1) = sign of a
  }
  // (a|2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n > 0 via reciprocity
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("IntPolynomial: degree must be >= 1");
  if (coeffs_.back() != 1) throw std::invalid_argument("IntPolynomial: polynomial must be monic");
}

IntPolynomial IntPolynomial::from_int64(const std::vector<std::int64_t>& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.emplace_back(static_cast<long>(v));
  return IntPolynomial(std::move(c));
}

namespace {

// Fraction-free Bareiss determinant; exact over Z.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Resultant of monic P (degree n) and its derivative via the Sylvester matrix.
mpz_class resultant_with_derivative(const IntPolynomial& p) {
  const int n = p.degree();
  if (n == 1) return 1;
  std::vector<mpz_class> a(p.coeffs().rbegin(), p.coeffs().rend());  // descending
  std::vector<mpz_class> d(static_cast<std::size_t>(n));             // P', descending
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * (n - i);
  const std::size_t dim = static_cast<std::size_t>(2 * n - 1);
  std::vector<std::vector<mpz_class>> m(dim, std::vector<mpz_class>(dim, mpz_class(0)));
  for (std::size_t r = 0; r + 1 < static_cast<std::size_t>(n); ++r)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) m[r][r + j] = a[j];
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
      m[static_cast<std::size_t>(n) - 1 + r][r + j] = d[j];
  return bareiss_det(m);
}

}  // namespace

mpz_class poly_discriminant(const IntPolynomial& p) {
  const int n = p.degree();
  mpz_class res = resultant_with_derivative(p);
  // monic leading coefficient, so no division beyond the sign
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) res = -res;
  return res;
}

namespace {

// Dense polynomials over F_p, coefficients ascending in [0, p).
using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly make_monic(ModPoly f, std::int64_t p) {
  trim(f);
  if (f.empty()) return f;
  if (f.back() == 1) return f;
  // modular inverse of the leading coefficient by Fermat
  std::int64_t inv = 1, base = f.back() % p, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (auto& c : f) c = c * inv % p;
  return f;
}

ModPoly mod(ModPoly a, const ModPoly& b, std::int64_t p) {
  trim(a);
  const int db = deg(b);
  while (deg(a) >= db) {
    const std::int64_t q = a.back();  // b monic
    const int shift = deg(a) - db;
    for (int i = 0; i <= db; ++i) {
      auto& c = a[static_cast<std::size_t>(i + shift)];
      c = (c - q * b[static_cast<std::size_t>(i)]) % p;
      if (c < 0) c += p;
    }
    trim(a);
  }
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = mod(std::move(a), make_monic(b, p), p);
    std::swap(a, b);
  }
  return make_monic(a, p);
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mod(std::move(r), m, p);
}

// x^p modulo m (m monic), square-and-multiply
ModPoly xp_mod(const ModPoly& m, std::int64_t p) {
  ModPoly result{1};
  ModPoly base = mod({0, 1}, m, p);
  std::int64_t e = p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

ModPoly frobenius(const ModPoly& t, const ModPoly& m, std::int64_t p) {
  // t(x) -> t(x)^p mod m. With coefficients in F_p this is t(x^p), evaluated
  // by Horner at the precomputed power.
  ModPoly xp = xp_mod(m, p);
  ModPoly acc{};
  for (std::size_t i = t.size(); i-- > 0;) {
    acc = mul_mod(acc, xp, m, p);
    if (t[i] != 0) {
      if (acc.empty()) acc.push_back(0);
      acc[0] = (acc[0] + t[i]) % p;
    }
  }
  return mod(std::move(acc), m, p);
}

ModPoly derivative(const ModPoly& f, std::int64_t p) {
  ModPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (static_cast<std::int64_t>(i) % p) % p);
  trim(d);
  return d;
}

ModPoly divexact(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  // a / b for monic b dividing a
  ModPoly r = a, q(a.size(), 0);
  trim(r);
  const int db = deg(b);
  while (deg(r) >= db) {
    const std::int64_t c = r.back();
    const int shift = deg(r) - db;
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& x = r[static_cast<std::size_t>(i + shift)];
      x = (x - c * b[static_cast<std::size_t>(i)]) % p;
      if (x < 0) x += p;
    }
    trim(r);
  }
  trim(q);
  return q;
}

ModPoly pth_root(const ModPoly& f, std::int64_t p) {
  // f = g(x)^p implies f has nonzero coefficients only at multiples of p,
  // and the F_p Frobenius fixes the coefficients.
  ModPoly g;
  for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) g.push_back(f[i]);
  return g;
}

// Product of the distinct irreducible factors of monic f.
ModPoly radical(ModPoly f, std::int64_t p) {
  trim(f);
  if (deg(f) <= 0) return {1};
  ModPoly df = derivative(f, p);
  if (df.empty()) return radical(pth_root(f, p), p);
  ModPoly g = gcd(f, df, p);
  if (deg(g) == 0) return f;
  ModPoly r = divexact(f, g, p);  // factors with multiplicity prime to p, each once
  // strip those factors from g, leaving the part whose exponents are all divisible by p
  ModPoly t = g;
  for (;;) {
    ModPoly c = gcd(t, r, p);
    if (deg(c) == 0) break;
    t = divexact(t, c, p);
  }
  if (deg(t) == 0) return r;
  ModPoly rest = radical(pth_root(t, p), p);
  // r and rest are coprime
  ModPoly prod(r.size() + rest.size() - 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < rest.size(); ++j) prod[i + j] = (prod[i + j] + r[i] * rest[j]) % p;
  trim(prod);
  return prod;
}

ModPoly reduce_poly(const IntPolynomial& P, std::int64_t p) {
  ModPoly f(P.coeffs().size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = static_cast<std::int64_t>(mpz_fdiv_ui(P.coeff(static_cast<int>(i)).get_mpz_t(),
                                                 static_cast<unsigned long>(p)));
  }
  return f;
}

// Smallest d >= 1 with gcd(x^{p^d} - x, f) nonconstant, plus a check that the
// degrees of all irreducible factors of f equal d. Returns -1 on mismatch.
int common_factor_degree(const ModPoly& f, std::int64_t p) {
  const int n = deg(f);
  ModPoly t = mod({0, 1}, f, p);  // x
  for (int d = 1; d <= n; ++d) {
    t = frobenius(t, f, p);
    ModPoly diff = t;
    if (diff.empty()) diff.push_back(0);
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    ModPoly g = gcd(diff, f, p);
    if (deg(g) >= 1) {
      // all factor degrees equal d exactly when f | x^{p^d} - x
      trim(diff);
      const bool divides = diff.empty() || deg(g) == n;
      if (!divides) return -1;
      if (n % d != 0) return -1;
      return d;
    }
  }
  return -1;
}

}  // namespace

LocalEulerData splitting_type_mod_p(const IntPolynomial& P, std::int64_t p, int n,
                                    const mpz_class& disc_f, const mpz_class& poly_disc) {
  if (p < 2) throw std::invalid_argument("splitting_type_mod_p: p must be prime");
  if (P.degree() != n) throw std::invalid_argument("splitting_type_mod_p: degree mismatch");
  if (disc_f == 0) throw std::invalid_argument("splitting_type_mod_p: zero field discriminant");

  const unsigned long vp_field =
      mpz_divisible_ui_p(disc_f.get_mpz_t(), static_cast<unsigned long>(p))
          ? mpz_remove(mpz_class().get_mpz_t(), disc_f.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t())
          : 0;
  const unsigned long vp_poly =
      mpz_divisible_ui_p(poly_disc.get_mpz_t(), static_cast<unsigned long>(p))
          ? mpz_remove(mpz_class().get_mpz_t(), poly_disc.get_mpz_t(), mpz_class(static_cast<long>(p)).get_mpz_t())
          : 0;
  // disc(P) = [O_F : Z[alpha]]^2 * disc(F), so a strict excess means p
  // divides the index and the mod-p factorization may lie.
  const bool index_divisor = vp_poly > vp_field;

  LocalEulerData out;
  out.p = p;
  out.certain = !index_divisor;

  ModPoly f = reduce_poly(P, p);

  if (vp_field == 0 && !index_divisor) {
    // unramified and faithful: f is squarefree with all factors of one degree
    const int d = common_factor_degree(f, p);
    if (d < 0)
      throw std::domain_error("splitting_type_mod_p: factor degrees differ; polynomial is not Galois");
    out.ramification_index = 1;
    out.residue_degree = d;
    out.num_primes = n / d;
    return out;
  }

  // ramified prime (or index divisor): read f and g off the distinct-part
  // factorization and set e from e*f*g = n
  ModPoly rad = radical(f, p);
  const int rad_deg = deg(rad);
  int d = rad_deg >= 1 ? common_factor_degree(rad, p) : -1;
  if (d < 0 || rad_deg % d != 0 || n % (d * (rad_deg / d)) != 0) {
    out.certain = false;
    out.ramification_index = n;
    out.residue_degree = 1;
    out.num_primes = 1;
    return out;
  }
  out.residue_degree = d;
  out.num_primes = rad_deg / d;
  out.ramification_index = n / (d * out.num_primes);
  return out;
}

LocalEulerData splitting_type_mod_p(const IntPolynomial& P, std::int64_t p, int n,
                                    const mpz_class& disc_f) {
  return splitting_type_mod_p(P, p, n, disc_f, poly_discriminant(P));
}

std::vector<std::int64_t> euler_to_dirichlet(const std::vector<LocalEulerData>& locals,
                                             std::int64_t N) {
  if (N < 1) throw std::invalid_argument("euler_to_dirichlet: N must be >= 1");
  std::map<std::int64_t, const LocalEulerData*> by_prime;
  for (const auto& l : locals) {
    if (l.p <= N && !by_prime.emplace(l.p, &l).second)
      throw std::invalid_argument("euler_to_dirichlet: duplicate local data for p=" + std::to_string(l.p));
  }
  const auto primes = primes_up_to(N);
  for (auto p : primes) {
    if (!by_prime.count(p))
      throw std::invalid_argument("euler_to_dirichlet: missing local data for p=" + std::to_string(p));
  }

  // smallest prime factor sieve
  std::vector<std::int32_t> spf(static_cast<std::size_t>(N) + 1, 0);
  for (auto p : primes)
    for (std::int64_t m = p; m <= N; m += p)
      if (spf[static_cast<std::size_t>(m)] == 0) spf[static_cast<std::size_t>(m)] = static_cast<std::int32_t>(p);

  // local coefficients: at p^m the factor (1 - p^{-f s})^{-g} contributes
  // binom(m/f + g - 1, g - 1) when f | m, else 0
  auto local_coeff = [](const LocalEulerData& l, int m) -> std::int64_t {
    const int f = l.residue_degree, g = l.num_primes;
    if (m % f != 0) return 0;
    const int k = m / f;
    std::int64_t b = 1;
    for (int i = 1; i <= g - 1; ++i) b = b * (k + i) / i;
    return b;
  };

  std::vector<std::int64_t> a(static_cast<std::size_t>(N) + 1, 0);
  a[1] = 1;
  for (std::int64_t m = 2; m <= N; ++m) {
    std::int64_t rest = m;
    std::int64_t value = 1;
    while (rest > 1) {
      const std::int64_t p = spf[static_cast<std::size_t>(rest)];
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      value *= local_coeff(*by_prime.at(p), e);
      if (value == 0) break;
    }
    a[static_cast<std::size_t>(m)] = value;
  }
  return std::vector<std::int64_t>(a.begin() + 1, a.end());
}

}  // namespace nflab::arith
