#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "nflab/parallel.hpp"
#include "nflab/quadratic.hpp"

// Bulk real-quadratic class numbers. Reduced indefinite forms of all
// discriminants in a block are enumerated together: a triple A, C >= 1,
// b > |A - C| is a reduced form (A, b, -C) of discriminant D = b^2 + 4AC
// (plus its sign twin), so for fixed (A, C) the b values hitting a block are
// a contiguous run. This sidesteps per-discriminant divisor searches and
// leaves only the rho cycle walks per discriminant.

namespace nflab::quadratic {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Form {
  std::int32_t a, b;
};

inline bool form_less(const Form& x, const Form& y) {
  return x.a < y.a || (x.a == y.a && x.b < y.b);
}

// h for one discriminant from its full list of reduced forms.
std::int64_t class_number_from_forms(std::int64_t D, std::vector<Form>& forms) {
  std::sort(forms.begin(), forms.end(), form_less);
  const std::int64_t s = isqrt64(D);
  std::int64_t b0 = s;
  if (((b0 ^ D) & 1) != 0) --b0;

  auto find = [&](std::int64_t a, std::int64_t b) {
    const Form key{static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)};
    auto it = std::lower_bound(forms.begin(), forms.end(), key, form_less);
    if (it == forms.end() || it->a != key.a || it->b != key.b)
      throw std::logic_error("census: rho left the enumerated reduced set");
    return static_cast<std::size_t>(it - forms.begin());
  };

  std::vector<std::uint8_t> visited(forms.size(), 0);
  std::int64_t cycles = 0;
  bool principal_negative_unit = false;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (visited[i]) continue;
    ++cycles;
    bool has_minus_one = false, has_principal = false;
    std::size_t j = i;
    while (!visited[j]) {
      visited[j] = 1;
      const std::int64_t a = forms[j].a, b = forms[j].b;
      if (a == -1) has_minus_one = true;
      if (a == 1 && b == b0) has_principal = true;
      const std::int64_t c = (b * b - D) / (4 * a);
      const std::int64_t t = 2 * std::llabs(c);
      std::int64_t r = (-b) % t;
      if (r < 0) r += t;
      j = find(c, s - (s - r) % t);
    }
    if (has_principal) principal_negative_unit = has_minus_one;
  }
  if (principal_negative_unit) return cycles;
  if (cycles % 2 != 0) throw std::logic_error("census: odd cycle count with unit norm +1");
  return cycles / 2;
}

}  // namespace

void real_class_number_census(std::int64_t lo, std::int64_t hi, unsigned jobs,
                              const std::function<void(std::int64_t, std::int64_t)>& sink) {
  if (lo < 1) lo = 1;
  if (hi < lo) return;

  // fundamental-discriminant bitmap for [lo, hi]
  std::vector<std::uint8_t> sf(static_cast<std::size_t>(hi) + 1, 1);
  sf[0] = 0;
  for (std::int64_t p = 2; p * p <= hi; ++p) {
    const std::int64_t pp = p * p;
    for (std::int64_t m = pp; m <= hi; m += pp) sf[static_cast<std::size_t>(m)] = 0;
  }
  auto fundamental = [&](std::int64_t D) {
    const std::int64_t m = D & 3;
    if (m == 1) return D != 1 && sf[static_cast<std::size_t>(D)] != 0;
    if (m != 0) return false;
    const std::int64_t d = D / 4;
    const std::int64_t dm = d & 3;
    return (dm == 2 || dm == 3) && sf[static_cast<std::size_t>(d)] != 0;
  };

  const std::int64_t kBlock = 4096;
  const std::size_t num_blocks = static_cast<std::size_t>((hi - lo) / kBlock) + 1;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> results(num_blocks);

  parallel_for(num_blocks, jobs, [&](std::size_t bi) {
    const std::int64_t B0 = lo + static_cast<std::int64_t>(bi) * kBlock;
    const std::int64_t B1 = std::min<std::int64_t>(B0 + kBlock, hi + 1);  // [B0, B1)
    const std::int64_t width = B1 - B0;

    std::vector<std::vector<Form>> buckets(static_cast<std::size_t>(width));
    const std::int64_t s_hi = isqrt64(B1 - 1);
    for (std::int64_t A = 1; A < s_hi; ++A) {
      // track floor(sqrt(B1-1-m)) and the least b with b^2 >= B0-m as m = 4AC grows
      std::int64_t m = 4 * A;
      std::int64_t r_hi = isqrt64(B1 - 1 - m);
      std::int64_t r_lo = (B0 > m) ? isqrt64(B0 - 1 - m) + 1 : 1;
      for (std::int64_t C = 1; A + C <= s_hi; ++C, m += 4 * A) {
        if (m >= B1) break;
        while (r_hi * r_hi > B1 - 1 - m) --r_hi;
        if (B0 > m) {
          while (r_lo > 1 && (r_lo - 1) * (r_lo - 1) >= B0 - m) --r_lo;
          while (r_lo * r_lo < B0 - m) ++r_lo;
        } else {
          r_lo = 1;
        }
        std::int64_t b = std::max(r_lo, std::llabs(A - C) + 1);
        for (; b <= r_hi; ++b) {
          const std::int64_t D = b * b + m;
          if (!fundamental(D)) continue;
          auto& bucket = buckets[static_cast<std::size_t>(D - B0)];
          bucket.push_back({static_cast<std::int32_t>(A), static_cast<std::int32_t>(b)});
          bucket.push_back({static_cast<std::int32_t>(-A), static_cast<std::int32_t>(b)});
        }
      }
    }

    auto& out = results[bi];
    for (std::int64_t D = B0; D < B1; ++D) {
      if (D < 5 || !fundamental(D)) continue;
      auto& forms = buckets[static_cast<std::size_t>(D - B0)];
      if (forms.empty()) throw std::logic_error("census: no reduced forms found for fundamental D");
      out.emplace_back(D, class_number_from_forms(D, forms));
      forms.clear();
      forms.shrink_to_fit();
    }
  });

  for (const auto& block : results)
    for (const auto& [D, h] : block) sink(D, h);
}

}  // namespace nflab::quadratic
