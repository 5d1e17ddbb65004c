#pragma once

#include <string>
#include <vector>

#include "holeham/generators.hpp"
#include "holeham/hamilton.hpp"
#include "holeham/holes.hpp"
#include "holeham/invariants.hpp"

namespace holeham {

struct AuditClaim {
  std::string name;
  std::string expected;
  std::string observed;
  bool confirmed = false;
};

struct SharpnessAudit {
  int family = 0;
  int a = 0;
  int b = 0;  // family 1 only
  Graph graph;
  DegreeSum sigma2 = DegreeSum::infinite();
  int alpha_tilde = 0;
  int kappa = 0;
  bool hamiltonian = false;
  bool hamiltonian_connected = false;
  /// False when the parameters lie outside the range the claims are made
  /// for; the values are then reported without judging them.
  bool claims_asserted = true;
  std::vector<AuditClaim> claims;

  bool all_confirmed() const {
    for (const auto& c : claims)
      if (!c.confirmed) return false;
    return true;
  }
};

namespace detail {

inline void measure(SharpnessAudit& audit) {
  const Graph& g = audit.graph;
  audit.sigma2 = sigma2(g);
  audit.alpha_tilde = hole_number(g).value;
  audit.kappa = kappa(g);
  audit.hamiltonian = is_hamiltonian(g);
  audit.hamiltonian_connected = is_hamiltonian_connected(g).connected;
}

inline AuditClaim claim(std::string name, std::string expected, std::string observed, bool ok) {
  return {std::move(name), std::move(expected), std::move(observed), ok};
}

}  // namespace detail

/**
 * K_a and K_b joined by one edge (b >= 3a + 4): meets the degree-sum bound
 * sigma2 >= 2 alpha~ but is only 1-connected and not hamiltonian.
 */
inline SharpnessAudit audit_sharpness1(int a, int b) {
  SharpnessAudit audit;
  audit.family = 1;
  audit.a = a;
  audit.b = b;
  audit.graph = sharpness1(a, b);
  detail::measure(audit);
  const auto& s2 = audit.sigma2;
  // With a = 1 the lone K_a vertex carries the bridge, so the cheapest
  // nonadjacent pair is 1 + (b-1) rather than (a-1) + (b-1).
  const long closed_form = a == 1 ? b : a + b - 2;
  audit.claims.push_back(detail::claim("sigma2 closed form", std::to_string(closed_form), s2.to_string(), s2 == closed_form));
  audit.claims.push_back(
      detail::claim("sigma2 >= 4a+2", ">= " + std::to_string(4 * a + 2), s2.to_string(), s2.at_least(4L * a + 2)));
  audit.claims.push_back(detail::claim("alpha~ = 2a+1", std::to_string(2 * a + 1), std::to_string(audit.alpha_tilde),
                                       audit.alpha_tilde == 2 * a + 1));
  audit.claims.push_back(detail::claim("sigma2 >= 2 alpha~", ">= " + std::to_string(2 * audit.alpha_tilde),
                                       s2.to_string(), s2.at_least(2L * audit.alpha_tilde)));
  audit.claims.push_back(detail::claim("kappa = 1", "1", std::to_string(audit.kappa), audit.kappa == 1));
  audit.claims.push_back(detail::claim("not hamiltonian", "false", audit.hamiltonian ? "true" : "false", !audit.hamiltonian));
  return audit;
}

/**
 * (K_{a-2} u K_1) v K_2: sigma2 = a+1 >= 2 alpha~ + 1 for a >= 6, yet only
 * 2-connected and not hamiltonian-connected. For 3 <= a <= 5 the graph is
 * still built and measured but the claims are not asserted.
 */
inline SharpnessAudit audit_sharpness2(int a) {
  SharpnessAudit audit;
  audit.family = 2;
  audit.a = a;
  audit.graph = sharpness2(a);
  detail::measure(audit);
  audit.claims_asserted = a >= 6;
  const auto& s2 = audit.sigma2;
  audit.claims.push_back(detail::claim("sigma2 = a+1", std::to_string(a + 1), s2.to_string(), s2 == a + 1));
  audit.claims.push_back(
      detail::claim("alpha~ <= 3", "<= 3", std::to_string(audit.alpha_tilde), audit.alpha_tilde <= 3));
  audit.claims.push_back(detail::claim("sigma2 >= 7", ">= 7", s2.to_string(), s2.at_least(7)));
  audit.claims.push_back(detail::claim("sigma2 >= 2 alpha~ + 1", ">= " + std::to_string(2 * audit.alpha_tilde + 1),
                                       s2.to_string(), s2.at_least(2L * audit.alpha_tilde + 1)));
  audit.claims.push_back(detail::claim("kappa = 2", "2", std::to_string(audit.kappa), audit.kappa == 2));
  audit.claims.push_back(detail::claim("not hamiltonian-connected", "false",
                                       audit.hamiltonian_connected ? "true" : "false", !audit.hamiltonian_connected));
  return audit;
}

}  // namespace holeham
