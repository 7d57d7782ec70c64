#pragma once

// Registry binding each machine-checkable claim to an executable check, plus
// the fundamental-group classification table.

#include "json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace enr {

struct ClaimRecord {
  std::string id;
  std::string tag;       // lattice | codes | ellsurf | divisor | moduli
  std::string location;  // where the statement lives
  enum class Status { kPass, kFail, kSkip } status = Status::kFail;
  std::string expected;
  std::string computed;
  std::string detail;
};

// (1,1) -> "Z/6"; (1,4) -> "S3 x Z/3"; (4,.) -> "(Z/3)^2 x Z/2".
// Inputs outside {1,4} are rejected.
std::string classify_pi1(int n_enriques, int n_cover);

class ClaimRegistry {
 public:
  static const ClaimRegistry& instance();

  std::vector<std::string> ids(const std::optional<std::string>& tag = std::nullopt) const;
  bool has(const std::string& id) const;
  ClaimRecord run(const std::string& id) const;

  struct Summary {
    int passed = 0, failed = 0, skipped = 0;
  };
  std::pair<std::vector<ClaimRecord>, Summary> run_all(
      const std::optional<std::string>& tag = std::nullopt) const;

 private:
  ClaimRegistry();
  struct Entry {
    std::string tag;
    std::string location;
    std::function<void(ClaimRecord&)> check;  // fills expected/computed/detail
    bool skip = false;
  };
  std::vector<std::pair<std::string, Entry>> entries_;  // sorted by id
};

nlohmann::json report_to_json(const std::vector<ClaimRecord>& records,
                              const ClaimRegistry::Summary& summary);
std::string report_table(const std::vector<ClaimRecord>& records,
                         const ClaimRegistry::Summary& summary);

}  // namespace enr
