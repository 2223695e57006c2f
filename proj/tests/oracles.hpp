#pragma once

// Brute-force reference implementations used to cross-check the library.
// Each oracle takes a different route from the production code: division
// instead of Moebius products, coset counting instead of elimination,
// schoolbook reduction instead of power tables, direct enumeration instead
// of closed forms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // ascending coefficients

inline Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(out);
}

/// Long division by a monic divisor; returns {quotient, remainder}.
inline std::pair<Poly, Poly> divide(Poly num, const Poly& den) {
  num = trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) return {Poly{0}, num};
  Poly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  num.resize(dd == 0 ? 1 : dd);
  return {trim(q), trim(num)};
}

/// Phi_n by dividing x^n - 1 by Phi_d for every proper divisor d.
inline Poly cyclotomic(std::int64_t n, std::map<std::int64_t, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divide(p, cyclotomic(d, memo));
    if (!(r.size() == 1 && r[0] == 0)) return {};
    p = q;
  }
  memo[n] = p;
  return p;
}

inline Poly cyclotomic(std::int64_t n) {
  std::map<std::int64_t, Poly> memo;
  return cyclotomic(n, memo);
}

// ---------------------------------------------------------------------------
// Abelian group Z^c / (row lattice) by counting cosets modulo N.

using Matrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det(Matrix m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t out = 0;
  for (std::size_t j = 0; j < k; ++j) {
    Matrix minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    out += (j % 2 == 0 ? 1 : -1) * m[0][j] * det(minor);
  }
  return out;
}

/// gcd of all r x r minors; 0 when every one vanishes.
inline std::int64_t minor_gcd(const Matrix& m, std::size_t cols, std::size_t r) {
  std::int64_t g = 0;
  const std::size_t rows = m.size();
  std::vector<bool> rsel(rows, false), csel(cols, false);
  std::fill(rsel.end() - static_cast<std::ptrdiff_t>(r), rsel.end(), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.end() - static_cast<std::ptrdiff_t>(r), csel.end(), true);
    do {
      Matrix sub;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!rsel[i]) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < cols; ++j) {
          if (csel[j]) row.push_back(m[i][j]);
        }
        sub.push_back(row);
      }
      g = std::gcd(g, det(sub));
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return g;
}

/// |(Z/N)^c / span of the rows mod N|, by closing the span under addition.
inline std::int64_t coset_count(const Matrix& m, std::size_t cols, std::int64_t N) {
  std::int64_t total = 1;
  for (std::size_t j = 0; j < cols; ++j) total *= N;
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t code = 0;
    for (std::size_t j = cols; j-- > 0;) code = code * N + v[j];
    return code;
  };
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::vector<std::vector<std::int64_t>> queue{std::vector<std::int64_t>(cols, 0)};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& row : m) {
      auto next = queue[head];
      for (std::size_t j = 0; j < cols; ++j) next[j] = (((next[j] + row[j]) % N) + N) % N;
      const auto code = encode(next);
      if (!seen[static_cast<std::size_t>(code)]) {
        seen[static_cast<std::size_t>(code)] = 1;
        queue.push_back(next);
      }
    }
  }
  return total / static_cast<std::int64_t>(queue.size());
}

/// Invariant factors of Z^cols / (row lattice), recovered from rank, the
/// minor gcd and coset counts modulo prime powers. Returns nullopt when a
/// needed prime power makes the count table larger than max_states.
inline std::optional<std::vector<std::int64_t>> invariant_factors(const Matrix& m, std::size_t cols,
                                                                  std::int64_t max_states = 300000) {
  std::size_t rank = 0;
  std::int64_t D = 1;
  for (std::size_t r = std::min(m.size(), cols); r >= 1; --r) {
    const auto g = minor_gcd(m, cols, r);
    if (g != 0) {
      rank = r;
      D = std::abs(g);
      break;
    }
  }
  std::vector<std::int64_t> out(cols, 1);
  for (std::size_t i = rank; i < cols; ++i) out[i] = 0;
  std::int64_t rest = D;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    int vmax = 0;
    while (rest % p == 0) {
      rest /= p;
      ++vmax;
    }
    // g(k) = log_p coset_count(p^k) - k (cols - rank) = sum_i min(v_i, k).
    std::vector<int> g(static_cast<std::size_t>(vmax) + 1, 0);
    std::int64_t pk = 1;
    for (int k = 1; k <= vmax; ++k) {
      pk *= p;
      std::int64_t states = 1;
      for (std::size_t j = 0; j < cols; ++j) states *= pk;
      if (states > max_states) return std::nullopt;
      std::int64_t c = coset_count(m, cols, pk);
      int e = 0;
      while (c % p == 0) {
        c /= p;
        ++e;
      }
      g[static_cast<std::size_t>(k)] = e - k * static_cast<int>(cols - rank);
    }
    // m_k = #{i : v_i >= k}; the m_k largest factors carry p^k.
    for (int k = 1; k <= vmax; ++k) {
      const int mk = g[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(k - 1)];
      for (int i = 0; i < mk; ++i) out[rank - 1 - static_cast<std::size_t>(i)] *= p;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schoolbook arithmetic modulo Phi_5 = 1 + x + x^2 + x^3 + x^4.

inline Poly mul_mod_phi5(const Poly& a, const Poly& b) {
  const Poly phi5{1, 1, 1, 1, 1};
  auto r = divide(multiply(a, b), phi5).second;
  r.resize(4, 0);
  return r;
}

// ---------------------------------------------------------------------------
// Number theory by trial division.

inline std::vector<std::int64_t> primes_of(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

inline std::int64_t phi(std::int64_t m) {
  std::int64_t c = 0;
  for (std::int64_t k = 1; k <= m; ++k) c += std::gcd(k, m) == 1;
  return c;
}

/// Excluded rho in [0, modulus): some prime of the modulus not dividing b3
/// divides x0 + rho b3, or one not dividing b2 divides y0 - rho b2.
inline std::int64_t bad_residue_count(std::int64_t modulus, std::int64_t b2, std::int64_t b3, std::int64_t x0,
                                      std::int64_t y0) {
  const auto ps = primes_of(modulus);
  std::int64_t bad = 0;
  for (std::int64_t rho = 0; rho < modulus; ++rho) {
    bool excluded = false;
    for (auto p : ps) {
      if (b3 % p != 0 && (x0 + rho * b3) % p == 0) excluded = true;
      if (b2 % p != 0 && (y0 - rho * b2) % p == 0) excluded = true;
    }
    bad += excluded;
  }
  return bad;
}

/// Existence of c_i coprime to a_i with sum c_i / a_i integral, searching
/// every residue c_i mod a_i (no normalization assumed).
inline bool condition_D_exists(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  const std::int64_t n = std::lcm(std::lcm(a1, a2), a3);
  for (std::int64_t c1 = 1; c1 < a1; ++c1) {
    if (std::gcd(c1, a1) != 1) continue;
    for (std::int64_t c2 = 1; c2 < a2; ++c2) {
      if (std::gcd(c2, a2) != 1) continue;
      for (std::int64_t c3 = 1; c3 < a3; ++c3) {
        if (std::gcd(c3, a3) != 1) continue;
        if ((c1 * (n / a1) + c2 * (n / a2) + c3 * (n / a3)) % n == 0) return true;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// D_n with raw (k, refl) pairs, index k + n*refl.

struct Dn {
  std::int64_t n;
  std::int64_t mul(std::int64_t x, std::int64_t y) const {
    const std::int64_t kx = x % n, ky = y % n;
    const bool rx = x >= n, ry = y >= n;
    const std::int64_t k = ((rx ? kx - ky : kx + ky) % n + n) % n;
    return k + ((rx != ry) ? n : 0);
  }
  std::int64_t inv(std::int64_t x) const { return x >= n ? x : (n - x) % n; }
  std::int64_t order(std::int64_t x) const {
    std::int64_t y = x, m = 1;
    while (y != 0) {
      y = mul(y, x);
      ++m;
    }
    return m;
  }
  std::vector<char> cyclic(std::int64_t x) const {
    std::vector<char> set(static_cast<std::size_t>(2 * n), 0);
    std::int64_t y = 0;
    do {
      set[static_cast<std::size_t>(y)] = 1;
      y = mul(y, x);
    } while (y != 0);
    return set;
  }
};

/// Conjugacy classes of cyclic subgroups of D_n by explicit enumeration.
inline std::int64_t cyclic_subgroup_classes(std::int64_t n) {
  const Dn G{n};
  std::set<std::vector<char>> subgroups;
  for (std::int64_t x = 0; x < 2 * n; ++x) subgroups.insert(G.cyclic(x));
  std::set<std::vector<char>> seen;
  std::int64_t classes = 0;
  for (const auto& H : subgroups) {
    if (seen.contains(H)) continue;
    ++classes;
    for (std::int64_t c = 0; c < 2 * n; ++c) {
      std::vector<char> conj(static_cast<std::size_t>(2 * n), 0);
      for (std::int64_t h = 0; h < 2 * n; ++h) {
        if (H[static_cast<std::size_t>(h)]) conj[static_cast<std::size_t>(G.mul(G.mul(c, h), G.inv(c)))] = 1;
      }
      seen.insert(conj);
    }
  }
  return classes;
}

/// Every ordered triple of reflections in D_n (no symmetry reduction):
/// does one have pairwise product orders {a1, a2, a3} as a multiset with
/// each pair of products generating the rotations?
inline bool reflection_triple_exists(std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t n) {
  const Dn G{n};
  std::vector<std::int64_t> want{a1, a2, a3};
  std::sort(want.begin(), want.end());
  auto generates = [&](std::int64_t x, std::int64_t y) {
    return std::gcd(std::gcd(x % n, y % n), n) == 1;
  };
  std::vector<std::int64_t> ord(static_cast<std::size_t>(2 * n));
  for (std::int64_t x = 0; x < 2 * n; ++x) ord[static_cast<std::size_t>(x)] = G.order(x);
  auto order = [&](std::int64_t x) { return ord[static_cast<std::size_t>(x)]; };
  for (std::int64_t i = n; i < 2 * n; ++i) {
    for (std::int64_t j = n; j < 2 * n; ++j) {
      const std::int64_t x = G.mul(i, j);
      for (std::int64_t k = n; k < 2 * n; ++k) {
        const std::int64_t y = G.mul(i, k), z = G.mul(j, k);
        std::vector<std::int64_t> got{order(x), order(y), order(z)};
        std::sort(got.begin(), got.end());
        if (got == want && generates(x, y) && generates(x, z) && generates(y, z)) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
