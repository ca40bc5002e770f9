#ifndef CNP_VERIFY_HPP
#define CNP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnp/identities.hpp"
#include "cnp/json_io.hpp"

namespace cnp {

struct VerificationReport {
  std::string identity;
  Json params = Json::object();
  std::string mode = "exact";  // or "probabilistic"
  bool ok = false;
  long elapsed_ms = 0;
  std::string detail;  // first failing case when !ok
};

Json to_json(const VerificationReport& r);

// Parameters left unset select the default box of each identity.
struct VerifyOptions {
  std::optional<int> n, l1, l2, r, i_max, k;
  std::optional<Partition> lambda;
  std::optional<KVec> kvec;
  bool probabilistic = false;
  std::uint64_t seed = 0;
  IdentityConfig guard;
  // test hook: perturb c_00 in the thm3 check
  bool perturb = false;
};

// registration order; "all" is not included
const std::vector<std::string>& verification_ids();
bool is_verification_id(const std::string& id);

// throws ResourceGuardExceeded or std::invalid_argument
VerificationReport run_verification(const std::string& id, const VerifyOptions& opt);
std::vector<VerificationReport> verify_all(const VerifyOptions& opt);

}  // namespace cnp

#endif
