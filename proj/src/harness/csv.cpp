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

#include "privlogit/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "privlogit/errors.hpp"

namespace privlogit::harness {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = line.find(delim, start);
    out.push_back(trim(std::string_view(line).substr(start, pos - start)));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table read_table(const std::string& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw EmptyInput("cannot open '" + path + "'");
  Table t;
  std::string line;
  char delim = 0;
  size_t width = 0;
  size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    if (delim == 0) {
      delim = line.find(';') != std::string::npos ? ';' : ',';
      if (has_header) {
        t.header = split(line, delim);
        width = t.header.size();
        continue;
      }
    }
    const auto cells = split(line, delim);
    if (width == 0) width = cells.size();
    if (cells.size() != width)
      throw ParseError(path + ": row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                       " fields, expected " + std::to_string(width));
    std::vector<double> vals(width);
    for (size_t c = 0; c < width; ++c)
      if (!parse_double(cells[c], vals[c]))
        throw ParseError(path + ": row " + std::to_string(row) + ", column " + std::to_string(c + 1) +
                         ": '" + cells[c] + "' is not a number");
    t.rows.push_back(std::move(vals));
  }
  if (t.rows.empty()) throw EmptyInput("'" + path + "' has no data rows");
  return t;
}

size_t response_index(const CsvSpec& spec, const std::vector<std::string>& header, size_t width) {
  if (!spec.response_column) return width - 1;
  const std::string& want = *spec.response_column;
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == want) return i;
  size_t idx = 0;
  const auto [ptr, ec] = std::from_chars(want.data(), want.data() + want.size(), idx);
  if (ec == std::errc() && ptr == want.data() + want.size() && idx < width) return idx;
  throw ConfigError("response column '" + want + "' not found");
}

}  // namespace

BinarizeRule BinarizeRule::parse(const std::string& expr) {
  std::string s = trim(expr);
  BinarizeRule r;
  size_t op_len = 0;
  if (s.rfind(">=", 0) == 0) {
    r.op = Op::kGe;
    op_len = 2;
  } else if (s.rfind("<=", 0) == 0) {
    r.op = Op::kLe;
    op_len = 2;
  } else if (s.rfind("==", 0) == 0) {
    r.op = Op::kEq;
    op_len = 2;
  } else if (s.rfind(">", 0) == 0) {
    r.op = Op::kGt;
    op_len = 1;
  } else if (s.rfind("<", 0) == 0) {
    r.op = Op::kLt;
    op_len = 1;
  } else {
    throw ConfigError("binarize rule '" + expr + "' must start with >=, >, <=, < or ==");
  }
  if (!parse_double(trim(s.substr(op_len)), r.threshold))
    throw ConfigError("binarize rule '" + expr + "' has no numeric threshold");
  return r;
}

bool BinarizeRule::apply(double v) const {
  switch (op) {
    case Op::kGe: return v >= threshold;
    case Op::kGt: return v > threshold;
    case Op::kLe: return v <= threshold;
    case Op::kLt: return v < threshold;
    case Op::kEq: return v == threshold;
  }
  return false;
}

void standardize_columns(Matrix& x) {
  const auto n = static_cast<double>(x.rows());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mean = x.col(j).sum() / n;
    x.col(j).array() -= mean;
    const double sd = std::sqrt(x.col(j).squaredNorm() / n);
    if (sd > 0) x.col(j) /= sd;
  }
}

LoadedData load_csv(const CsvSpec& spec) {
  if (spec.paths.empty()) throw ConfigError("no CSV path given");
  Table all;
  for (const auto& path : spec.paths) {
    Table t = read_table(path, spec.has_header);
    if (all.rows.empty() && all.header.empty()) {
      all.header = t.header;
    } else if (t.header != all.header || t.rows.front().size() != all.rows.front().size()) {
      throw ParseError("'" + path + "' does not share the columns of '" + spec.paths.front() + "'");
    }
    all.rows.insert(all.rows.end(), std::make_move_iterator(t.rows.begin()),
                    std::make_move_iterator(t.rows.end()));
  }
  const size_t width = all.rows.front().size();
  if (width < 2) throw ParseError("need at least one feature column and a response");
  const size_t resp = response_index(spec, all.header, width);

  const auto n = static_cast<Eigen::Index>(all.rows.size());
  const auto p = static_cast<Eigen::Index>(width - 1);
  Matrix x(n, p);
  Vector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = all.rows[static_cast<size_t>(i)];
    Eigen::Index k = 0;
    for (size_t c = 0; c < width; ++c) {
      if (c == resp) continue;
      x(i, k++) = r[c];
    }
    const double v = r[resp];
    if (spec.binarize) {
      y(i) = spec.binarize->apply(v) ? 1.0 : 0.0;
    } else if (v == 0.0 || v == 1.0) {
      y(i) = v;
    } else {
      throw ParseError("data row " + std::to_string(i + 1) + ", column " + std::to_string(resp + 1) +
                       ": response " + std::to_string(v) + " is not 0/1 and no binarize rule was given");
    }
  }
  if (spec.standardize) standardize_columns(x);

  std::vector<std::string> names;
  for (size_t c = 0; c < width; ++c) {
    if (c == resp) continue;
    names.push_back(c < all.header.size() ? all.header[c] : "x" + std::to_string(c + 1));
  }
  if (spec.add_intercept) {
    Matrix with(n, p + 1);
    with.col(0).setOnes();
    with.rightCols(p) = x;
    x = std::move(with);
    names.insert(names.begin(), "intercept");
  }
  return {Dataset(std::move(x), std::move(y)), std::move(names)};
}

void write_csv(const Dataset& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  for (Eigen::Index j = 0; j < d.cols(); ++j) out << 'x' << j + 1 << ',';
  out << "y\n";
  char buf[32];
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      const auto res = std::to_chars(buf, buf + sizeof buf, d.x()(i, j));
      out.write(buf, res.ptr - buf);
      out << ',';
    }
    out << static_cast<int>(d.y()(i)) << '\n';
  }
  if (!out) throw ConfigError("failed writing '" + path + "'");
}

std::string default_wine_dir() {
  if (const char* env = std::getenv("PRIVLOGIT_WINE_DIR"); env && *env) return env;
  return PRIVLOGIT_DATA_DIR;
}

LoadedData load_wine(const std::string& dir) {
  namespace fs = std::filesystem;
  CsvSpec spec;
  for (const char* name : {"winequality-red.csv", "winequality-white.csv"}) {
    const fs::path p = fs::path(dir) / name;
    if (!fs::exists(p)) throw EmptyInput("Wine file " + p.string() + " is missing");
    spec.paths.push_back(p.string());
  }
  spec.response_column = "quality";
  spec.binarize = BinarizeRule{BinarizeRule::Op::kGe, 6.0};
  spec.standardize = true;
  spec.add_intercept = true;
  return load_csv(spec);
}

}  // namespace privlogit::harness
