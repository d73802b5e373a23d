#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "morseshell/complex.hpp"

namespace msh {

using Rational = boost::rational<std::int64_t>;

// Values on the non-empty faces of K.
struct DiscreteMorseFunction {
  FaceMap<Rational> values;

  Rational operator()(const Simplex& s) const;
};

struct MorseReport {
  bool is_dmf = false;
  bool is_monotone = false;
  bool is_semi_injective = false;
  bool is_generic = false;
  // Human-readable counterexamples, one per failed condition at most.
  std::vector<std::string> witnesses;
};

// Throws std::invalid_argument when f misses a face of K or names a face
// outside K.
MorseReport validate(const SimplicialComplex& k, const DiscreteMorseFunction& f);

// Monotone, semi-injective, generic function with the same pairing. Values
// are consecutive integers. Throws std::invalid_argument if f is not a
// discrete Morse function.
DiscreteMorseFunction canonicalize(const SimplicialComplex& k, const DiscreteMorseFunction& f);

// Critical face -> index.
std::map<Simplex, int> critical_faces(const SimplicialComplex& k, const DiscreteMorseFunction& f);
// census[i] = number of critical faces of dimension i.
std::vector<std::size_t> critical_census(const SimplicialComplex& k,
                                         const DiscreteMorseFunction& f);

struct CriticalStep {
  Simplex sigma;
  friend bool operator==(const CriticalStep&, const CriticalStep&) = default;
};
struct CollapseStep {
  Simplex theta;
  Simplex tau;
  friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};
using FiltrationStep = std::variant<CriticalStep, CollapseStep>;

// Steps in increasing value. Throws std::invalid_argument when a level is
// neither a single face nor a ridge/facet pair, or a prefix is not a
// subcomplex.
std::vector<FiltrationStep> filtration(const SimplicialComplex& k,
                                       const DiscreteMorseFunction& f);

DiscreteMorseFunction trivial_dmf(const SimplicialComplex& k);
DiscreteMorseFunction greedy_collapse_dmf(const SimplicialComplex& k);

// Function whose gradient pairs are exactly `pairs` (face, coface of
// codimension one). Throws std::invalid_argument if the pairs do not form an
// acyclic matching.
DiscreteMorseFunction dmf_from_matching(const SimplicialComplex& k,
                                        const std::vector<std::pair<Simplex, Simplex>>& pairs);

// (face, coface) pairs of codimension one where f does not increase.
std::vector<std::pair<Simplex, Simplex>> gradient_pairs(const SimplicialComplex& k,
                                                        const DiscreteMorseFunction& f);

}  // namespace msh
