/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PRIVLOGIT_HARNESS_CSV_HPP_
#define PRIVLOGIT_HARNESS_CSV_HPP_

#include <optional>
#include <string>
#include <vector>

#include "privlogit/core/dataset.hpp"

namespace privlogit::harness {

// Maps a numeric response to {0, 1}: "op threshold" with op one of
// >=, >, <=, <, ==. A response satisfying the comparison becomes 1.
struct BinarizeRule {
  enum class Op { kGe, kGt, kLe, kLt, kEq };
  Op op = Op::kGe;
  double threshold = 0.0;

  // Throws ConfigError.
  static BinarizeRule parse(const std::string& expr);
  bool apply(double v) const;
};

struct CsvSpec {
  // Several files are concatenated row-wise; they must share a header.
  std::vector<std::string> paths;
  bool has_header = true;
  // Column name (needs a header) or 0-based index; the last column when unset.
  std::optional<std::string> response_column;
  bool standardize = false;
  bool add_intercept = false;
  std::optional<BinarizeRule> binarize;
};

struct LoadedData {
  Dataset data;
  // Feature names in column order ("intercept" first when added).
  std::vector<std::string> feature_names;
};

// Fields split on ',' or ';' (whichever the first line uses); surrounding
// double quotes are stripped. Throws ParseError (with row and column) for a
// non-numeric cell or a non-binary response without a rule, EmptyInput for
// a file without data rows.
LoadedData load_csv(const CsvSpec& spec);

// Per-column z-score with the population standard deviation; constant
// columns are only centered.
void standardize_columns(Matrix& x);

// Writes covariates then the response, with a header x1..xp,y.
void write_csv(const Dataset& d, const std::string& path);

// Merged red and white Wine Quality files from `dir`, quality >= 6 as the
// positive class, z-scored features, intercept first. Throws EmptyInput
// naming the missing file when either half is absent.
LoadedData load_wine(const std::string& dir);

// Directory holding the Wine files: $PRIVLOGIT_WINE_DIR if set, else the
// bundled data directory.
std::string default_wine_dir();

}  // namespace privlogit::harness

#endif  // PRIVLOGIT_HARNESS_CSV_HPP_
