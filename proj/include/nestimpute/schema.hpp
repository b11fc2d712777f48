#pragma once

// Nested categorical data model: households carrying household-level
// variables and a roster of individuals carrying individual-level variables.
// Level indices are 1-based; 0 marks a cell with no current value.

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nestimpute {

enum class Scope { household, individual };

struct VariableSpec {
  std::string name;
  Scope scope = Scope::individual;
  std::vector<std::string> levels;
  // Ordinal variables support arithmetic rules; the ordinal value of level c
  // is c - 1 (so level 1 of an age variable is age 0).
  bool ordinal = false;

  int cardinality() const { return static_cast<int>(levels.size()); }
  // 1-based index of `label`, or 0 when the label is unknown.
  int level_index(std::string_view label) const;
};

struct DatasetSchema;

// Provenance attached to a schema produced by head_to_household_transform.
struct HeadMove {
  std::shared_ptr<const DatasetSchema> original;
  int relationship_var = -1;  // same position in both layouts
  int head_level = 0;         // 1-based level of the head in the original coding
  // For each original individual variable: index of its "<name> of HH"
  // household copy, or -1 for the relationship variable.
  std::vector<int> head_copy;
};

struct DatasetSchema {
  std::vector<VariableSpec> household_vars;   // q of them
  std::vector<VariableSpec> individual_vars;  // p of them
  std::vector<int> household_sizes;           // H, sorted ascending
  int size_var = -1;                          // index into household_vars
  std::optional<std::string> relationship_var;
  std::optional<std::string> head_level;
  std::optional<HeadMove> head_move;

  int q() const { return static_cast<int>(household_vars.size()); }
  int p() const { return static_cast<int>(individual_vars.size()); }
  bool head_moved() const { return head_move.has_value(); }
  // Number of stored individual rows for a household of size h.
  int rows_for_size(int h) const { return head_moved() ? h - 1 : h; }
  // 1-based level of the size variable that encodes size h (0 if h not in H).
  int size_level(int h) const;
  bool allows_size(int h) const { return size_level(h) != 0; }

  int household_index(std::string_view name) const;   // -1 if absent
  int individual_index(std::string_view name) const;  // -1 if absent
  int relationship_index() const;                     // -1 if not configured

  // Validates the invariants; throws SchemaError.
  void validate() const;
};

// Parses the line-oriented schema format:
//   var <name> scope=<household|individual> levels=<a,b,...|lo..hi> [ordinal]
//   household_size=<name>
//   sizes=<h1,h2,...>
//   relationship=<name>
//   head=<label>
DatasetSchema parse_schema(std::string_view text);
std::string format_schema(const DatasetSchema& schema);

struct Household {
  std::string id;
  int size = 0;                      // n_i
  std::vector<int> household_values; // length q
  std::vector<int> person_values;    // rows x p, row-major

  int rows(int p) const { return p == 0 ? 0 : static_cast<int>(person_values.size()) / p; }
  std::span<const int> person(int j, int p) const {
    return {person_values.data() + static_cast<std::size_t>(j) * p, static_cast<std::size_t>(p)};
  }
  std::span<int> person(int j, int p) {
    return {person_values.data() + static_cast<std::size_t>(j) * p, static_cast<std::size_t>(p)};
  }
  friend bool operator==(const Household&, const Household&) = default;
};

// a_i and b_ij; 1 marks a missing cell.
struct MissingnessMask {
  std::vector<std::uint8_t> household_mask;
  std::vector<std::uint8_t> person_mask;  // rows x p

  bool any() const;
  std::size_t count() const;
  friend bool operator==(const MissingnessMask&, const MissingnessMask&) = default;
};

// Read-only view used by the rule engine and likelihood code.
struct HouseholdView {
  int size = 0;
  std::span<const int> household;
  std::span<const int> persons;

  static HouseholdView of(const Household& h) { return {h.size, h.household_values, h.person_values}; }
};

struct Dataset {
  std::shared_ptr<const DatasetSchema> schema;
  std::vector<Household> households;
  std::vector<MissingnessMask> masks;
  // Original row of the head in each household; filled by the head-move
  // transform so the inverse can restore the exact layout.
  std::vector<int> head_rows;

  std::size_t n() const { return households.size(); }
  std::size_t N() const;
  std::map<int, std::size_t> n1h() const;
  std::size_t missing_cells() const;
  bool complete() const { return missing_cells() == 0; }
  // Every cell carries a value (masked cells may have been filled in).
  bool filled() const;

  // Throws DataError if any invariant fails.
  void validate() const;
};

// Builds a Dataset from the long-format delimited data: header row with
// hh_id, person_idx, every household variable, every individual variable;
// household columns repeated on each row; `NA` marks a missing cell.
Dataset load_dataset(std::shared_ptr<const DatasetSchema> schema, std::istream& rows);
Dataset load_dataset(std::string_view schema_text, std::istream& rows);

// Writes the same long format. With `with_missing` the masked cells are
// written as NA, otherwise their current values are written.
void write_dataset(const Dataset& d, std::ostream& out, bool with_missing = false);

// Moves the head's individual variables to household-level "<var> of HH"
// variables, removes the head row, and recodes everyone else's relationship
// onto the remaining levels.
Dataset head_to_household_transform(const Dataset& d);
Dataset inverse_transform(const Dataset& d);
std::shared_ptr<const DatasetSchema> transformed_schema(const std::shared_ptr<const DatasetSchema>& original);

// Maps a relationship level between the original and head-removed codings.
inline int recode_without_head(int level, int head_level) {
  return level > head_level ? level - 1 : level;
}
inline int recode_with_head(int level, int head_level) {
  return level >= head_level ? level + 1 : level;
}

}  // namespace nestimpute
