#include "tevtrop/formulas.hpp"

namespace tevtrop {

namespace {

// Deficit against 2^g accumulated when ell < 0 (zero when ell >= 0):
// sum over 0 <= i <= -ell-1 of (g-2i+1)(C(g,i) - C(g,i-1)).
BigInt negative_ell_deficit(int g, int ell) {
  BigInt deficit = 0;
  for (int i = 0; i <= -ell - 1; ++i) {
    deficit += (g - 2 * i + 1) * (binomial(g, i) - binomial(g, i - 1));
  }
  return deficit;
}

bool all_profiles_simple(const Params& params) {
  for (const Profile& mu : params.profiles()) {
    if (!mu.is_simple()) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Classical: return "classical";
    case Provenance::PositiveExcess: return "positive-excess";
    case Provenance::NegativeDeficit: return "negative-deficit";
    case Provenance::GeneralProfiles: return "general-profiles";
    case Provenance::Extrapolated: return "extrapolated";
  }
  throw ConstructionFault("to_string: unknown provenance");
}

DegreeValue tev_classical(int g) {
  if (g < 0) throw DomainError("tev_classical: g must be nonnegative");
  return {BigInt(1) << g, Provenance::Classical};
}

DegreeValue tev_ell(int g, int ell) {
  if (g < 0) throw DomainError("tev_ell: g must be nonnegative");
  if (g < -2 * ell) {
    throw DomainError("tev_ell: need g >= -2*ell, got g = " +
                      std::to_string(g) + ", ell = " + std::to_string(ell));
  }
  if (ell == 0) return tev_classical(g);
  if (ell > 0) {
    if (g == 0) return {1, Provenance::Extrapolated};
    return {BigInt(1) << g, Provenance::PositiveExcess};
  }
  BigInt value = (BigInt(1) << g) - negative_ell_deficit(g, ell);
  if (value < 0) {
    throw ConstructionFault("tev_ell: deficit formula went negative at g = " +
                            std::to_string(g) + ", ell = " +
                            std::to_string(ell));
  }
  return {value, Provenance::NegativeDeficit};
}

DegreeValue tev_general(const Params& params) {
  require_valid(params);
  if (all_profiles_simple(params)) return tev_ell(params.g(), params.ell());

  const int g = params.g();
  const int ell = params.ell();
  const auto& mus = params.profiles();
  const int k = static_cast<int>(mus.size());
  const int first_mag = mus.front().magnitude();
  const int last_mag = mus.back().magnitude();

  BigInt value = (BigInt(1) << g) - negative_ell_deficit(g, ell);
  for (int i = -ell; i <= first_mag - ell - 2; ++i) value -= binomial(g, i);
  for (int i = -ell; i <= last_mag - ell - 2; ++i) value -= binomial(g, i);
  value += (first_mag + last_mag - 2) * binomial(g, -ell - 1);
  for (int h = 1; h + 1 < k; ++h) {
    const int mag = mus[h].magnitude();
    for (int i = -ell; i <= mag - ell - 2; ++i) {
      value -= (mag - i - ell - 1) * (binomial(g, i) - binomial(g, i - 1));
    }
  }
  if (value < 0) {
    throw ConstructionFault("tev_general: formula went negative for g = " +
                            std::to_string(g) + ", ell = " +
                            std::to_string(ell));
  }
  return {value, Provenance::GeneralProfiles};
}

}  // namespace tevtrop
