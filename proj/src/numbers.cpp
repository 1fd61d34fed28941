// Copyright 2026 The sipdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sipdepth/numbers.hpp"

#include <cassert>
#include <cmath>

#include "sipdepth/error.hpp"

namespace sipdepth {

std::vector<std::uint64_t> nth_primes(std::size_t k) {
  if (k == 0) return {};
  // p_k < k (ln k + ln ln k) for k >= 6; pad generously for small k.
  const double kd = static_cast<double>(k);
  double estimate = k < 6 ? 15.0 : kd * (std::log(kd) + std::log(std::log(kd)));
  auto limit = static_cast<std::size_t>(estimate * 1.1) + 10;
  while (true) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    primes.reserve(k);
    for (std::size_t p = 2; p <= limit && primes.size() < k; ++p) {
      if (composite[p]) continue;
      primes.push_back(p);
      for (std::size_t q = p * p; q <= limit; q += p) composite[q] = 1;
    }
    if (primes.size() == k) return primes;
    limit *= 2;
  }
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer crt(const CrtSystem& sys) {
  const auto& mod = sys.moduli;
  const auto& res = sys.residues;
  if (mod.size() != res.size()) throw Error(Errc::kDimensionMismatch, {mod.size(), res.size()});
  for (std::size_t i = 0; i < mod.size(); ++i) {
    if (mod[i] <= 1) throw Error(Errc::kModulusTooSmall, {i});
    if (res[i] < 0 || res[i] >= mod[i]) throw Error(Errc::kResidueOutOfRange, {i});
  }
  for (std::size_t i = 0; i < mod.size(); ++i) {
    for (std::size_t j = i + 1; j < mod.size(); ++j) {
      if (gcd(mod[i], mod[j]) != 1) throw Error(Errc::kNotCoprime, {i, j});
    }
  }
  // Fold the congruences one at a time: x = acc (mod prod).
  Integer acc = 0, prod = 1;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    const auto eg = extended_gcd(prod, mod[i]);  // eg.s * prod = 1 (mod mod[i])
    const Integer step = floor_mod((res[i] - acc) * eg.s, mod[i]);
    acc += prod * step;
    prod *= mod[i];
  }
#ifndef NDEBUG
  for (std::size_t i = 0; i < mod.size(); ++i) assert(floor_mod(acc, mod[i]) == res[i]);
#endif
  return acc;
}

}  // namespace sipdepth
