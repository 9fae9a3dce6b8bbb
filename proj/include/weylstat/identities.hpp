#pragma once

// Registry of the identities checked by exhaustive enumeration, and the
// verification engine. Each entry knows its rank domain, how to enumerate its
// parameters (J, S, eps, sign, ...) and how to compute both sides.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "weylstat/enumeration.hpp"

namespace weylstat {

using ParamValue = std::variant<int, std::string, std::vector<int>>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

std::string format_params(const ParamList& params);

struct IdentityReport {
  std::string id;
  int rank = 0;
  ParamList params;
  bool equal = false;
  /// For cross-multiplied identities lhs is L * den and rhs the numerator.
  std::string lhs;
  std::string rhs;
  std::uint64_t count = 0;
  std::int64_t ms = 0;
  std::string note;
};

struct VerifyOptions {
  int jobs = 0;
  bool force = false;
};

enum class RankParity : std::uint8_t { any, even, odd };

struct IdentitySpec {
  std::string id;
  Family family;
  /// Human-readable statement of what is compared.
  std::string formula;
  int n_min;
  /// Top of the default domain used by verify --all.
  int n_max;
  /// Largest rank accepted without force.
  int n_limit;
  RankParity parity = RankParity::any;
  /// "n" or "m" (the second means the group has rank 2m).
  std::string rank_name = "n";
  std::function<std::vector<IdentityReport>(int rank, const VerifyOptions&)> run;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<IdentitySpec>& identity_registry();
/// Throws UnknownIdentity.
const IdentitySpec& find_identity(std::string_view id);
bool rank_in_domain(const IdentitySpec& spec, int rank, bool force = false);
/// Ranks n_min..top that satisfy the parity rule.
std::vector<int> domain_ranks(const IdentitySpec& spec, int top);

/// Throws std::invalid_argument when the rank is outside the domain.
std::vector<IdentityReport> verify(std::string_view id, int rank, const VerifyOptions& opts = {});

/// JSON array following {"id","rank","params","equal","lhs","rhs","count","ms"};
/// ms is written as 0 when timing is false.
std::string reports_to_json(const std::vector<IdentityReport>& reports, bool timing = true);
/// "PASS thm-odd-eulerian n=3 {} count=6"
std::string report_line(const IdentityReport& r, bool timing = true);

}  // namespace weylstat
