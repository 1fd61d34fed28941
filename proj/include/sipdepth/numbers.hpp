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

#ifndef SIPDEPTH_NUMBERS_HPP_
#define SIPDEPTH_NUMBERS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sipdepth/sip.hpp"

namespace sipdepth {

/// The first k primes, ascending. Sieve of Eratosthenes whose bound comes
/// from the prime number theorem and doubles until k primes are found.
std::vector<std::uint64_t> nth_primes(std::size_t k);

struct CrtSystem {
  std::vector<Integer> moduli;
  std::vector<Integer> residues;
};

/// The unique x in [0, prod moduli) with x = residues[i] (mod moduli[i]).
/// Throws ModulusTooSmall(i), NotCoprime(i, j) or ResidueOutOfRange(i).
Integer crt(const CrtSystem& sys);

struct ExtendedGcd {
  Integer g;
  Integer s;  ///< s*a + t*b == g
  Integer t;
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Non-negative remainder of a modulo m (m > 0).
Integer floor_mod(const Integer& a, const Integer& m);

}  // namespace sipdepth

#endif  // SIPDEPTH_NUMBERS_HPP_
