#pragma once
// Closed-form degree formulas, the first of the three independent routes.

#include "tevtrop/core.hpp"

#include <string>

namespace tevtrop {

// Which closed form produced a value.
enum class Provenance {
  Classical,        // ell = 0
  PositiveExcess,   // ell > 0, g >= 1
  NegativeDeficit,  // ell < 0
  GeneralProfiles,  // non-simple profiles
  Extrapolated,     // ell > 0, g = 0 (value 1; outside the stated range)
};

std::string to_string(Provenance p);

struct DegreeValue {
  BigInt value;
  Provenance provenance;
};

// ell = 0, all profiles simple: 2^g.
DegreeValue tev_classical(int g);

// All profiles simple, any ell. Throws DomainError outside g >= 0,
// g >= -2*ell. Throws ConstructionFault if the deficit formula ever
// produced a negative value (it cannot on the valid domain).
DegreeValue tev_ell(int g, int ell);

// Arbitrary profiles; depends only on profile magnitudes. Validates params.
DegreeValue tev_general(const Params& params);

}  // namespace tevtrop
