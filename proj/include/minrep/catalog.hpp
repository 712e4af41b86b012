#pragma once

#include <string>
#include <vector>

namespace minrep::catalog {

enum class Family { Split, Euclidean, Complex, Quaternionic };

enum class JosephAnnihilator { Yes, No, NotApplicable };

struct FamilyEntry {
  Family family;
  std::string name;
  std::vector<std::string> algebras;
  bool highest_weight_module = false;
  JosephAnnihilator joseph = JosephAnnihilator::Yes;
  /// type-A members, for which the Joseph ideal is not defined
  std::vector<std::string> type_a_members;
  std::string remark;
};

const FamilyEntry& query(Family family);
const FamilyEntry& query(const std::string& name);  ///< throws on unknown tag
const std::vector<FamilyEntry>& all_entries();

std::string to_string(Family family);
std::string to_string(JosephAnnihilator j);

}  // namespace minrep::catalog
