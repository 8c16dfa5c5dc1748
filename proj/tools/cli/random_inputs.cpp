#include "random_inputs.hpp"

namespace adelic::cli {

StepFunction random_step_function(const LocalField& F, std::mt19937_64& rng, std::int64_t coset_cap) {
  const std::int64_t q = F.residue_cardinality();
  int max_total = 0;
  for (std::int64_t c = q; c <= coset_cap; c *= q) ++max_total;
  std::uniform_int_distribution<int> total_dist(0, std::max(0, max_total));
  const int total = total_dist(rng);
  std::uniform_int_distribution<int> split(0, total);
  const int M = split(rng);
  StepFunction f(F, M, total - M);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> phase(0, F.prime() - 1);
  for (std::int64_t i = 0; i < f.coset_count(); ++i) {
    int v = val(rng);
    if (v == 0) continue;
    if (rng() % 4 == 0) {
      f.set(i, CycScalar::root(Rational(phase(rng), F.prime()), Rational(v)));
    } else {
      f.set(i, CycScalar::rational(Rational(v)));
    }
  }
  return f;
}

std::vector<Place> small_places(const GlobalField& K) {
  std::vector<Place> pool = infinite_places(K);
  if (K.is_number_field()) {
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (const auto& v : places_above(K, p)) pool.push_back(v);
    }
  } else if (K.q_exponent() == 1) {
    const int q = static_cast<int>(K.q());
    for (int d = 1; d <= 2; ++d) {
      for (const auto& P : FpPoly::monic_irreducibles(q, d)) {
        for (const auto& v : places_above(K, P)) pool.push_back(v);
      }
    }
  }
  return pool;
}

Idele random_idele(const GlobalField& K, std::mt19937_64& rng, int spread) {
  Idele a(K);
  std::uniform_int_distribution<int> val(-spread, spread);
  std::uniform_int_distribution<int> frac(1, spread + 1);
  std::uniform_real_distribution<double> real(1.0 / (spread + 1), spread + 1.0);
  for (const auto& v : small_places(K)) {
    if (rng() % 2) continue;
    if (v.is_archimedean()) {
      if (rng() % 2) {
        a.set_archimedean(v, ArchComponent::from_exact(PosRealExact::from_rational(Rational(frac(rng), frac(rng)))));
      } else {
        a.set_archimedean(v, ArchComponent::from_double(real(rng)));
      }
    } else {
      a.set_valuation(v, val(rng));
    }
  }
  return a;
}

}  // namespace adelic::cli
