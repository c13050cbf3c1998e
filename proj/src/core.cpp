#include "tevtrop/core.hpp"

#include <numeric>
#include <sstream>

namespace tevtrop {

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

int Profile::magnitude() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Profile::is_simple() const {
  return parts.size() == 1 && parts[0] == 1;
}

Params::Params(int g, int ell, std::vector<Profile> profiles)
    : g_(g), ell_(ell), profiles_(std::move(profiles)) {}

Params Params::all_simple(int g, int ell) {
  int n = g + 3 + 2 * ell;
  std::vector<Profile> profiles;
  for (int h = 0; h < n; ++h) profiles.emplace_back(std::vector<int>{1});
  Params p(g, ell, std::move(profiles));
  p.all_simple_ = true;
  return p;
}

ValidityReport validate(const Params& params) {
  ValidityReport report;
  if (params.g() < 0) {
    report.fail("genus-range: g must be nonnegative, got " +
                std::to_string(params.g()));
  }
  if (params.d() < 1) {
    report.fail("degree-range: d = g+1+ell = " + std::to_string(params.d()) +
                " must be at least 1");
  }
  if (params.n() < 3) {
    report.fail("marks-range: n = g+3+2*ell = " + std::to_string(params.n()) +
                " must be at least 3 (g >= -2*ell)");
  }
  const auto& mus = params.profiles();
  if (mus.size() < 3) {
    report.fail("profile-count: need at least 3 profiles, got " +
                std::to_string(mus.size()));
  }
  long long total = 0;
  int prev_mag = -1;
  for (size_t h = 0; h < mus.size(); ++h) {
    const Profile& mu = mus[h];
    if (mu.parts.empty()) {
      report.fail("part-positive: profile " + std::to_string(h + 1) +
                  " is empty");
      continue;
    }
    for (int part : mu.parts) {
      if (part < 1) {
        report.fail("part-positive: profile " + std::to_string(h + 1) +
                    " has part " + std::to_string(part));
        break;
      }
    }
    int mag = mu.magnitude();
    total += mag;
    if (mag > params.d()) {
      report.fail("profile-magnitude: |profile " + std::to_string(h + 1) +
                  "| = " + std::to_string(mag) + " exceeds d = " +
                  std::to_string(params.d()));
    }
    if (h > 0 && prev_mag >= 0 && mag > prev_mag) {
      report.fail("profile-order: magnitudes must be non-increasing, |" +
                  std::to_string(h) + "| = " + std::to_string(prev_mag) +
                  " < |" + std::to_string(h + 1) + "| = " +
                  std::to_string(mag));
    }
    prev_mag = mag;
  }
  if (!mus.empty() && total != params.n()) {
    report.fail("profile-sum: profile magnitudes sum to " +
                std::to_string(total) + ", expected n = " +
                std::to_string(params.n()));
  }
  return report;
}

void require_valid(const Params& params) {
  ValidityReport report = validate(params);
  if (report.ok) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : report.violations) msg << "\n  " << v;
  throw DomainError(msg.str());
}

}  // namespace tevtrop
