#pragma once

// Ordinary character degrees of a finite group from the class multiplication
// coefficients, by simultaneous diagonalization of the class matrices over a
// prime field GF(l) that contains the exp(H)-th roots of unity.

#include <cstdint>
#include <vector>

#include "defzero/permgroup.hpp"

namespace defzero::charoracle {

using groups::Group;

struct ClassMatrixSystem {
  std::size_t order = 0;
  std::uint64_t exponent = 1;
  std::size_t k = 0;
  std::vector<std::uint64_t> class_sizes;
  /// coefficient(i, j, l) = #{x in C_i : x^{-1} z_l in C_j} for the representative z_l of C_l.
  std::vector<std::uint32_t> a;
  std::uint64_t ell = 0;
  /// Class of x^{-1} for x in C_i.
  std::vector<std::size_t> inverse_class;

  std::uint32_t coefficient(std::size_t i, std::size_t j, std::size_t l) const { return a[(i * k + j) * k + l]; }
};

/// Smallest prime l with l = 1 mod e and l > bound.
std::uint64_t auxiliary_prime(std::uint64_t e, std::uint64_t bound);

/// Counts products directly; asserts the class-size identity and commutativity
/// of the class matrices (VerificationFailed).
ClassMatrixSystem class_multiplication_coefficients(const Group& h);

/// omega(class sum) per class over GF(l), with omega(identity class) = 1.
using CentralCharacter = std::vector<std::uint64_t>;

/// Exactly k central characters, sorted. Throws SplitFailure when 64 random
/// combinations in a row fail to split any eigenspace.
std::vector<CentralCharacter> central_characters(const ClassMatrixSystem& sys, std::uint64_t seed = 1);

/// chi(1) per character, in the same order. Throws DegreeRecoveryFailed.
std::vector<std::uint64_t> degrees(const ClassMatrixSystem& sys, const std::vector<CentralCharacter>& chars);

struct OracleResult {
  std::uint64_t ell = 0;
  std::size_t class_count = 0;
  std::vector<std::uint64_t> degrees;  // ascending
  std::size_t defect_zero = 0;
};

/// Characters chi with chi(1)_p = |H|_p.
OracleResult defect_zero_count(const Group& h, std::uint32_t p, std::uint64_t seed = 1);

}  // namespace defzero::charoracle
