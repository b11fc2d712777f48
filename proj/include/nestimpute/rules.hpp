#pragma once

// Structural-zero engine. Rules are written against the original (head as an
// individual) layout and evaluated on either layout: for head-moved data the
// head is reconstituted as a virtual roster member from its household-level
// copies, so a rule's verdict never depends on the layout.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nestimpute/schema.hpp"

namespace nestimpute {

using BigCount = boost::multiprecision::cpp_int;

enum class Cmp { lt, le, gt, ge, eq, ne };

// Membership set over the levels of one variable, indexed by 1-based level.
using LevelSet = std::vector<char>;

struct Atom {
  int var = -1;  // individual variable (original coding)
  LevelSet levels;
};

// Picks roster members: the head, everyone, or those satisfying every atom.
struct Selector {
  enum class Kind { head, all, where };
  Kind kind = Kind::all;
  std::vector<Atom> atoms;
};

// A variable read off a role: one household variable, or the given
// individual variable of every selected roster member.
struct Ref {
  enum class Role { household, head, select };
  Role role = Role::household;
  Selector selector;  // Role::select
  int var = -1;       // household index (Role::household) or individual index, original schema
};

// Number of selected members lies in [min, max].
struct CountRule {
  Selector selector;
  int min = 0;
  int max = 1 << 30;
};

// Every referenced value lies in `allowed` (ordinal bounds compile to sets).
struct AttrBoundRule {
  Ref ref;
  LevelSet allowed;
};

// ord(a) op ord(b) + offset for every pair of distinct members a, b.
struct PairDiffRule {
  Ref a;
  Ref b;
  Cmp op = Cmp::ge;
  int offset = 0;
};

// No pair of distinct members may carry a forbidden (a, b) value pair.
struct ValuePairRule {
  Ref a;
  Ref b;
  int levels_b = 0;
  std::vector<char> forbidden;  // (la - 1) * levels_b + (lb - 1)
};

struct RuleTemplate {
  std::variant<CountRule, AttrBoundRule, PairDiffRule, ValuePairRule> body;
  // Rule only binds when at least one member matches the guard.
  std::optional<Selector> when;
  std::string source;
};

enum class RuleStatus {
  active,
  // Vacuous after the head-move transform (e.g. "exactly one head").
  eliminated,
  // Reads only the head and household variables; after the transform it is
  // a check on household-level variables.
  household_level,
};

// Parses one rule line against `schema` (names resolve against the original
// layout when `schema` is head-moved).
RuleTemplate parse_rule(std::string_view line, const DatasetSchema& schema);

class RuleSet {
 public:
  // The empty rule set: every household is feasible.
  RuleSet() = default;
  RuleSet(std::vector<RuleTemplate> rules, std::shared_ptr<const DatasetSchema> schema);

  // Same rules bound to another layout of the same data (e.g. head-moved).
  RuleSet for_schema(std::shared_ptr<const DatasetSchema> schema) const;

  bool is_feasible(const HouseholdView& h) const;

  std::size_t size() const { return rules_.size(); }
  std::size_t active_count() const;
  bool empty() const { return active_count() == 0; }
  const std::vector<RuleTemplate>& rules() const { return rules_; }
  const std::vector<RuleStatus>& status() const { return status_; }
  const std::shared_ptr<const DatasetSchema>& schema() const { return schema_; }
  // True when every active rule is an unguarded CountRule.
  bool count_only() const;

 private:
  friend struct RosterAccess;
  std::vector<RuleTemplate> rules_;
  std::vector<RuleStatus> status_;
  std::shared_ptr<const DatasetSchema> schema_;
};

RuleSet parse_rules(std::string_view text, std::shared_ptr<const DatasetSchema> schema);

// Household must carry a value in every cell (no unfilled missing cells).
bool is_feasible(const Household& h, const RuleSet& rules);

// |C_h|: product of household-variable cardinalities (the size variable is
// fixed by h) times the individual-variable space raised to the row count.
BigCount count_combinations(const DatasetSchema& schema, int h);

// |S_h|. Closed form when the active rules are all unguarded CountRules,
// otherwise exhaustive enumeration of C_h (requires |C_h| <= enumeration_limit).
BigCount count_structural_zeros(const DatasetSchema& schema, const RuleSet& rules, int h,
                                std::uint64_t enumeration_limit = 100'000'000);

// Visits every member of C_h (size variable fixed at h).
void enumerate_combinations(const DatasetSchema& schema, int h, const std::function<void(const Household&)>& visit,
                            std::uint64_t limit = 1'000'000);
// Visits every member of C_h - S_h exactly once.
void enumerate_feasible(const DatasetSchema& schema, const RuleSet& rules, int h,
                        const std::function<void(const Household&)>& visit, std::uint64_t limit = 1'000'000);

}  // namespace nestimpute
