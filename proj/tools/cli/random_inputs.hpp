#pragma once

// Seeded random inputs for the suite and the inversion command.

#include <cstdint>
#include <random>
#include <vector>

#include "adelic/global_fields.hpp"
#include "adelic/harmonic.hpp"

namespace adelic::cli {

/// Random step function with q^(M+N) <= coset_cap, rational values in [-3, 3]
/// and an occasional p-th root of unity.
StepFunction random_step_function(const LocalField& F, std::mt19937_64& rng, std::int64_t coset_cap = 4096);

/// Places over small primes (or small irreducibles) together with the
/// infinite places.
std::vector<Place> small_places(const GlobalField& K);

/// Random idele supported on small_places(K): valuations in [-spread, spread],
/// archimedean components in [1/(spread+1), spread+1], exact or floating.
Idele random_idele(const GlobalField& K, std::mt19937_64& rng, int spread = 3);

}  // namespace adelic::cli
