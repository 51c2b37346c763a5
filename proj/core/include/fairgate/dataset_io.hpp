#pragma once

#include <optional>
#include <string>

#include "fairgate/schema.hpp"

namespace fairgate {

/// Parse a schema descriptor file. Line format, one feature per line:
///   feature <label> numeric
///   feature <label> categorical <level>,<level>,...
///   feature <label> target <positive-level>
/// Blank lines and lines starting with '#' are ignored.
Schema read_schema_file(const std::string& path);
void write_schema_file(const Schema& schema, const std::string& path,
                       const std::string& positive_level);

/// The fixed 15-attribute UCI Adult schema (14 features + income target).
/// Categorical levels are the canonical Adult level lists.
Schema adult_schema();

/// Load a comma-separated file against `schema`. Rows containing
/// `missing_token` (after whitespace trimming) in any field are dropped.
/// Lines starting with '|' are skipped; a trailing '.' on the target field
/// is stripped (the distributed Adult test file carries both quirks).
/// The target is 1 iff the target field equals the schema's positive level.
Dataset load_csv(const std::string& path, const Schema& schema,
                 const std::string& missing_token = "?");

/// load_csv with the built-in Adult schema.
Dataset load_adult(const std::string& path,
                   const std::string& missing_token = "?");

/// Replace the 7-level marital-status feature with a binary
/// {Married, Unmarried} feature: levels starting with "Married-" map to
/// Married, the rest to Unmarried. Throws DataError if absent.
Dataset recode_marital(const Dataset& d);

/// Feature labels of the paper's n_X = 87 case-study profile, schema order:
/// workclass, education, education-num, marital-status, occupation,
/// relationship, hours-per-week, native-country.
std::vector<std::string> adult_study_features();

/// Default partition for the case study: S_P = {age}, S_U = the study
/// features, everything else (sex, race, fnlwgt, capital-gain/loss) held out.
FeaturePartition adult_default_partition();

}  // namespace fairgate
