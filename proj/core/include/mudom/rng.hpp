// Deterministic random inputs. Raw words come from std::mt19937_64 (whose
// output sequence the standard pins down); uniforms use the top 53 bits and
// normals use Box-Muller, so fixtures reproduce bit-exactly across platforms
// (std::normal_distribution is implementation-defined and avoided).
#pragma once

#include <cstdint>
#include <random>

#include "mudom/types.hpp"

namespace mudom {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  double uniform();          // [0, 1), 53-bit
  double normal();           // N(0, 1)
  Complex complex_normal();  // (N + iN)/sqrt(2), unit variance

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Matrix3 ginibre(SeededRng& rng);

// Strict contraction: Ginibre rescaled to norm bound*(1-u), u uniform in (0, 1/2).
// Pre: 0 < norm_bound <= 1.
Matrix3 random_contraction(std::uint64_t seed, double norm_bound);

// Haar unitary: QR of a Ginibre sample, modified Gram-Schmidt with a second
// orthogonalization pass, positive-real diagonal normalization.
Matrix3 random_unitary(std::uint64_t seed);

}  // namespace mudom
