#pragma once
// Core exact-arithmetic types, problem parameters, and instance validation.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tevtrop {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Invalid user-facing input (bad parameters, out-of-domain query).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An internal builder invariant failed; indicates a bug, not bad input.
struct ConstructionFault : std::logic_error {
  using std::logic_error::logic_error;
};
// A stabilized cover does not match the expected canonical moduli point.
struct StabilizationMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
// A dilation matrix came out non-square.
struct NonSquareFault : std::logic_error {
  using std::logic_error::logic_error;
};
// A Hurwitz query fell outside both the catalog and the oracle's range.
struct OracleRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero-extended binomial coefficient: 0 whenever b < 0, a < 0, or b > a.
BigInt binomial(long long a, long long b);

// Ramification profile over one marked point: a vector of positive parts.
struct Profile {
  std::vector<int> parts;

  Profile() = default;
  explicit Profile(std::vector<int> p) : parts(std::move(p)) {}

  int magnitude() const;
  bool is_simple() const;  // exactly one part, equal to 1
  bool operator==(const Profile&) const = default;
};

// Problem instance: genus g, excess ell, and one profile per marked point.
// Degree and marked-point count are determined: d = g+1+ell, n = g+3+2*ell.
class Params {
 public:
  // Explicit profiles, kept in the order given (validate() reports
  // non-descending magnitudes; constructors never silently re-sort).
  Params(int g, int ell, std::vector<Profile> profiles);

  // Distinguished all-simple instance: n profiles, each (1).
  static Params all_simple(int g, int ell);

  int g() const { return g_; }
  int ell() const { return ell_; }
  int d() const { return g_ + 1 + ell_; }
  int n() const { return g_ + 3 + 2 * ell_; }
  const std::vector<Profile>& profiles() const { return profiles_; }
  bool all_simple_tag() const { return all_simple_; }

 private:
  int g_;
  int ell_;
  std::vector<Profile> profiles_;
  bool all_simple_ = false;
};

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Checks every instance constraint. Violation messages start with a stable
// code: genus-range, degree-range, marks-range, profile-count, profile-sum,
// profile-magnitude, profile-order, part-positive.
ValidityReport validate(const Params& params);

// Throws DomainError listing all violations unless params validates.
void require_valid(const Params& params);

}  // namespace tevtrop
