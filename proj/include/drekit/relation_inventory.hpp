#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace drekit {

// The closed relation label set. Labels carry 1-based ids matching the
// corpus `rid` convention; one label is designated as the no-relation
// class and is excluded from F1 scoring.
class RelationInventory {
 public:
  RelationInventory(std::vector<std::string> labels, std::string no_relation)
      : labels_(std::move(labels)), no_relation_(std::move(no_relation)) {
    for (std::size_t k = 0; k < labels_.size(); ++k) index_[labels_[k]] = static_cast<int>(k) + 1;
    if (!no_relation_.empty() && !index_.count(no_relation_))
      throw std::invalid_argument("no_relation label not in inventory: " + no_relation_);
  }

  static const RelationInventory& dialogre() {
    static const RelationInventory inv(
        {
            "per:positive_impression", "per:negative_impression", "per:acquaintance",
            "per:alumni", "per:boss", "per:subordinate", "per:client", "per:dates",
            "per:friends", "per:girl/boyfriend", "per:neighbor", "per:roommate",
            "per:children", "per:other_family", "per:parents", "per:siblings",
            "per:spouse", "per:place_of_residence", "per:place_of_birth",
            "per:visited_place", "per:origin", "per:employee_or_member_of",
            "per:schools_attended", "per:works", "per:age", "per:date_of_birth",
            "per:major", "per:place_of_work", "per:title", "per:alternate_names",
            "per:pet", "gpe:residents_of_place", "gpe:visitors_of_place",
            "org:employees_or_members", "org:students", "unanswerable",
        },
        "unanswerable");
    return inv;
  }

  // File format: {"labels": [...], "no_relation": "..."} or a bare array.
  static RelationInventory from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open inventory file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.is_array()) return RelationInventory(j.get<std::vector<std::string>>(), "");
    return RelationInventory(j.at("labels").get<std::vector<std::string>>(),
                             j.value("no_relation", std::string{}));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool contains(std::string_view label) const { return index_.count(std::string(label)) > 0; }
  // 1-based id; 0 when absent.
  int id_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    return it == index_.end() ? 0 : it->second;
  }
  const std::string& label(int id) const { return labels_.at(static_cast<std::size_t>(id) - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& no_relation() const { return no_relation_; }
  bool is_no_relation(std::string_view label) const {
    return !no_relation_.empty() && label == no_relation_;
  }

 private:
  std::vector<std::string> labels_;
  std::string no_relation_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace drekit
