// Copyright 2026 The OnlineLP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "olp/mps.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "olp/error.h"

namespace olp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kRanges, kBounds };

const char* section_name(Section s) {
  switch (s) {
    case Section::kNone:
      return "(start)";
    case Section::kName:
      return "NAME";
    case Section::kObjSense:
      return "OBJSENSE";
    case Section::kRows:
      return "ROWS";
    case Section::kColumns:
      return "COLUMNS";
    case Section::kRhs:
      return "RHS";
    case Section::kRanges:
      return "RANGES";
    case Section::kBounds:
      return "BOUNDS";
  }
  return "?";
}

struct SourceRow {
  std::string name;
  char type = 'L';
  double rhs = 0.0;
  bool has_range = false;
  double range = 0.0;
};

struct SourceCol {
  std::string name;
  double cost = 0.0;
  std::map<int, double> entries;  // source row -> value
  double lb = 0.0;
  double ub = kInf;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double to_number(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + s + "'", line);
  }
}

std::string upper_case(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

class MpsReader {
 public:
  LpInstance read(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool ended = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto tokens = tokenize(line);
      if (tokens.empty() || tokens[0][0] == '*') continue;
      const bool indented = std::isspace(static_cast<unsigned char>(line[0]));
      if (!indented && start_section(tokens, line_no)) {
        if (section_ == Section::kNone) {
          ended = true;
          break;
        }
        continue;
      }
      data_line(tokens, line_no);
    }
    if (!ended) {
      throw ParseError(std::string("missing ENDATA (input ended in section ") +
                           section_name(section_) + ")",
                       line_no);
    }
    return build();
  }

 private:
  // Returns true when the line opened a section; ENDATA resets to kNone.
  bool start_section(const std::vector<std::string>& t, int line) {
    const std::string key = upper_case(t[0]);
    if (key == "NAME") {
      section_ = Section::kName;
      if (t.size() > 1) name_ = t[1];
    } else if (key == "OBJSENSE") {
      section_ = Section::kObjSense;
      if (t.size() > 1) set_sense(t[1], line);
    } else if (key == "ROWS") {
      section_ = Section::kRows;
    } else if (key == "COLUMNS") {
      section_ = Section::kColumns;
    } else if (key == "RHS") {
      section_ = Section::kRhs;
    } else if (key == "RANGES") {
      section_ = Section::kRanges;
    } else if (key == "BOUNDS") {
      section_ = Section::kBounds;
    } else if (key == "ENDATA") {
      section_ = Section::kNone;
    } else {
      return false;
    }
    return true;
  }

  void set_sense(const std::string& s, int line) {
    const std::string v = upper_case(s);
    if (v == "MAX" || v == "MAXIMIZE") {
      minimize_ = false;
    } else if (v == "MIN" || v == "MINIMIZE") {
      minimize_ = true;
    } else {
      throw ParseError("unknown objective sense '" + s + "'", line);
    }
  }

  int find_row(const std::string& name, int line) const {
    const auto it = row_index_.find(name);
    if (it == row_index_.end()) {
      throw ParseError("unknown row '" + name + "'", line);
    }
    return it->second;
  }

  int find_col(const std::string& name, int line) const {
    const auto it = col_index_.find(name);
    if (it == col_index_.end()) {
      throw ParseError("unknown column '" + name + "'", line);
    }
    return it->second;
  }

  void data_line(const std::vector<std::string>& t, int line) {
    switch (section_) {
      case Section::kNone:
      case Section::kName:
        throw ParseError("data outside of a section", line);
      case Section::kObjSense:
        set_sense(t[0], line);
        return;
      case Section::kRows:
        rows_line(t, line);
        return;
      case Section::kColumns:
        columns_line(t, line);
        return;
      case Section::kRhs:
      case Section::kRanges:
        rhs_line(t, line, section_ == Section::kRanges);
        return;
      case Section::kBounds:
        bounds_line(t, line);
        return;
    }
  }

  void rows_line(const std::vector<std::string>& t, int line) {
    if (t.size() != 2) throw ParseError("ROWS entry needs a type and a name", line);
    const std::string type = upper_case(t[0]);
    const std::string& name = t[1];
    if (row_index_.count(name) || name == objective_ || free_rows_.count(name)) {
      throw ParseError("duplicate row '" + name + "'", line);
    }
    if (type == "N") {
      if (objective_.empty()) {
        objective_ = name;
      } else {
        free_rows_[name] = 1;
      }
      return;
    }
    if (type != "L" && type != "G" && type != "E") {
      throw ParseError("unknown row type '" + t[0] + "'", line);
    }
    SourceRow r;
    r.name = name;
    r.type = type[0];
    row_index_[name] = static_cast<int>(rows_.size());
    rows_.push_back(r);
  }

  void columns_line(const std::vector<std::string>& t, int line) {
    if (t.size() >= 3 && upper_case(t[1]) == "'MARKER'") return;
    if (t.size() != 3 && t.size() != 5) {
      throw ParseError("COLUMNS entry needs a name and one or two row/value pairs",
                       line);
    }
    auto it = col_index_.find(t[0]);
    int j;
    if (it == col_index_.end()) {
      j = static_cast<int>(cols_.size());
      col_index_[t[0]] = j;
      cols_.push_back(SourceCol{t[0], 0.0, {}, 0.0, kInf});
      seen_cost_.push_back(false);
    } else {
      j = it->second;
    }
    for (std::size_t p = 1; p + 1 < t.size(); p += 2) {
      const std::string& row = t[p];
      const double v = to_number(t[p + 1], line);
      if (row == objective_) {
        if (seen_cost_[j]) {
          throw ParseError("duplicate objective entry for column '" + t[0] + "'",
                           line);
        }
        seen_cost_[j] = true;
        cols_[j].cost = v;
        continue;
      }
      if (free_rows_.count(row)) continue;
      const int r = find_row(row, line);
      if (!cols_[j].entries.emplace(r, v).second) {
        throw ParseError("duplicate entry for column '" + t[0] + "' in row '" +
                             row + "'",
                         line);
      }
    }
  }

  void rhs_line(const std::vector<std::string>& t, int line, bool ranges) {
    // The set name is optional; it is present when the count is odd.
    const std::size_t first = t.size() % 2 == 1 ? 1 : 0;
    if (t.size() < first + 2 || (t.size() - first) % 2 != 0) {
      throw ParseError("malformed RHS/RANGES entry", line);
    }
    for (std::size_t p = first; p + 1 < t.size(); p += 2) {
      const std::string& row = t[p];
      const double v = to_number(t[p + 1], line);
      if (row == objective_) {
        if (ranges) throw ParseError("range on the objective row", line);
        objective_rhs_ = v;
        continue;
      }
      if (free_rows_.count(row)) continue;
      SourceRow& r = rows_[find_row(row, line)];
      if (ranges) {
        if (r.has_range) throw ParseError("duplicate range for row '" + row + "'", line);
        r.has_range = true;
        r.range = v;
      } else {
        r.rhs = v;
      }
    }
  }

  void bounds_line(const std::vector<std::string>& t, int line) {
    const std::string type = upper_case(t[0]);
    const bool needs_value = type == "UP" || type == "LO" || type == "FX";
    const bool no_value = type == "FR" || type == "MI" || type == "PL" ||
                          type == "BV";
    if (!needs_value && !no_value) {
      throw ParseError("unknown bound type '" + t[0] + "'", line);
    }
    std::string col;
    double v = 0.0;
    if (needs_value) {
      if (t.size() == 4) {
        col = t[2];
      } else if (t.size() == 3) {
        col = t[1];
      } else {
        throw ParseError("malformed " + type + " bound", line);
      }
      v = to_number(t.back(), line);
    } else {
      if (t.size() == 3) {
        col = t[2];
      } else if (t.size() == 2) {
        col = t[1];
      } else {
        throw ParseError("malformed " + type + " bound", line);
      }
    }
    SourceCol& c = cols_[find_col(col, line)];
    if (type == "UP") {
      c.ub = v;
    } else if (type == "LO") {
      c.lb = v;
    } else if (type == "FX") {
      c.lb = v;
      c.ub = v;
    } else if (type == "PL") {
      c.ub = kInf;
    } else if (type == "BV") {
      c.lb = 0.0;
      c.ub = 1.0;
    } else {
      throw ParseError("free and negative-lower columns are not supported ('" +
                           col + "')",
                       line);
    }
    if (!std::isfinite(c.lb)) {
      throw ParseError("infinite lower bound on column '" + col + "'", line);
    }
  }

  LpInstance build() {
    if (rows_.empty()) throw ParseError("model has no constraint rows", 0);
    // Constant in the source objective sense.
    double constant = -objective_rhs_;
    std::vector<double> lo(rows_.size());
    std::vector<double> hi(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const SourceRow& s = rows_[r];
      const double range = std::abs(s.range);
      switch (s.type) {
        case 'L':
          lo[r] = s.has_range ? s.rhs - range : -kInf;
          hi[r] = s.rhs;
          break;
        case 'G':
          lo[r] = s.rhs;
          hi[r] = s.has_range ? s.rhs + range : kInf;
          break;
        default:  // 'E'
          lo[r] = s.rhs;
          hi[r] = s.rhs;
          if (s.has_range && s.range > 0.0) hi[r] = s.rhs + s.range;
          if (s.has_range && s.range < 0.0) lo[r] = s.rhs + s.range;
          break;
      }
    }
    std::vector<int> kept;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      const SourceCol& c = cols_[j];
      if (c.ub < c.lb) {
        throw ParseError("column '" + c.name + "' has upper bound below lower",
                         0);
      }
      if (c.lb != 0.0) {
        for (const auto& [r, v] : c.entries) {
          lo[r] -= v * c.lb;
          hi[r] -= v * c.lb;
        }
        constant += c.cost * c.lb;
      }
      if (c.ub > c.lb) kept.push_back(static_cast<int>(j));
    }
    if (kept.empty()) throw ParseError("model has no free columns", 0);

    // Row emission: the primary row keeps the source orientation (G rows
    // negated), the twin carries the other side.
    LpMetadata meta;
    meta.name = name_;
    std::vector<double> rhs;
    std::vector<int> primary_of(rows_.size());
    std::vector<int> twin_of(rows_.size(), -1);
    auto emit = [&](int src, bool negated, bool primary, double value) {
      const int id = static_cast<int>(rhs.size());
      rhs.push_back(value);
      meta.row_origin.push_back(RowOrigin{src, negated, primary});
      meta.row_names.push_back(primary ? rows_[src].name
                                       : rows_[src].name + "#twin");
      return id;
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int src = static_cast<int>(r);
      if (rows_[r].type == 'G') {
        primary_of[r] = emit(src, true, true, -lo[r]);
        if (std::isfinite(hi[r])) twin_of[r] = emit(src, false, false, hi[r]);
      } else {
        primary_of[r] = emit(src, false, true, hi[r]);
        if (std::isfinite(lo[r])) twin_of[r] = emit(src, true, false, -lo[r]);
      }
    }
    const int m = static_cast<int>(rhs.size());
    const double sense = minimize_ ? -1.0 : 1.0;
    std::vector<int> col_ptr{0};
    std::vector<int> row_idx;
    std::vector<double> values;
    std::vector<double> obj;
    std::vector<double> upper;
    std::vector<std::pair<int, double>> entries;
    for (int j : kept) {
      const SourceCol& c = cols_[j];
      entries.clear();
      for (const auto& [r, v] : c.entries) {
        const int p = primary_of[r];
        const bool pneg = meta.row_origin[p].negated;
        entries.emplace_back(p, pneg ? -v : v);
        if (twin_of[r] >= 0) entries.emplace_back(twin_of[r], pneg ? v : -v);
      }
      std::sort(entries.begin(), entries.end());
      for (const auto& [r, v] : entries) {
        row_idx.push_back(r);
        values.push_back(v);
      }
      col_ptr.push_back(static_cast<int>(row_idx.size()));
      obj.push_back(sense * c.cost);
      upper.push_back(c.ub - c.lb);
      meta.col_names.push_back(c.name);
    }
    meta.objective_offset = sense * constant;
    meta.source_minimize = minimize_;
    return LpInstance::from_csc(m, static_cast<int>(kept.size()),
                                std::move(col_ptr), std::move(row_idx),
                                std::move(values), std::move(rhs),
                                std::move(obj), std::move(upper),
                                std::move(meta));
  }

  Section section_ = Section::kNone;
  std::string name_;
  std::string objective_;
  double objective_rhs_ = 0.0;
  bool minimize_ = true;
  std::vector<SourceRow> rows_;
  std::vector<SourceCol> cols_;
  std::vector<bool> seen_cost_;
  std::unordered_map<std::string, int> row_index_;
  std::unordered_map<std::string, int> col_index_;
  std::unordered_map<std::string, int> free_rows_;
};

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

LpInstance parse_mps(std::istream& in) {
  MpsReader reader;
  return reader.read(in);
}

LpInstance parse_mps_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open MPS file '" + path + "'");
  try {
    return parse_mps(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line());
  }
}

void write_mps(const LpInstance& instance, std::ostream& out) {
  const LpMetadata& meta = instance.metadata();
  const int m = instance.num_rows();
  const int n = instance.num_cols();
  auto row_name = [&](int i) {
    return static_cast<int>(meta.row_names.size()) == m && !meta.row_names[i].empty()
               ? meta.row_names[i]
               : "R" + std::to_string(i);
  };
  auto col_name = [&](int j) {
    return static_cast<int>(meta.col_names.size()) == n && !meta.col_names[j].empty()
               ? meta.col_names[j]
               : "C" + std::to_string(j);
  };
  std::string obj_name = "OBJ";
  for (int i = 0; i < m; ++i) {
    while (row_name(i) == obj_name) obj_name += "_";
  }
  out << "NAME " << (meta.name.empty() ? "OLP" : meta.name) << "\n";
  out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N " << obj_name << "\n";
  for (int i = 0; i < m; ++i) out << " L " << row_name(i) << "\n";
  out << "COLUMNS\n";
  const auto c = instance.obj();
  for (int j = 0; j < n; ++j) {
    const std::string name = col_name(j);
    out << "    " << name << " " << obj_name << " " << number(c[j]) << "\n";
    const ColumnView col = instance.column(j);
    for (std::size_t p = 0; p < col.size(); ++p) {
      out << "    " << name << " " << row_name(col.rows[p]) << " "
          << number(col.values[p]) << "\n";
    }
  }
  out << "RHS\n";
  const auto b = instance.rhs();
  for (int i = 0; i < m; ++i) {
    if (b[i] != 0.0) out << "    RHS " << row_name(i) << " " << number(b[i]) << "\n";
  }
  if (meta.objective_offset != 0.0) {
    out << "    RHS " << obj_name << " " << number(-meta.objective_offset) << "\n";
  }
  out << "BOUNDS\n";
  const auto u = instance.upper();
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(u[j])) {
      out << " UP BND " << col_name(j) << " " << number(u[j]) << "\n";
    }
  }
  out << "ENDATA\n";
}

LpInstance netlib_modify(const LpInstance& instance) {
  const int m = instance.num_rows();
  const int n = instance.num_cols();
  const LpMetadata& meta = instance.metadata();
  const bool tracked = static_cast<int>(meta.row_origin.size()) == m;
  std::vector<int> new_index(static_cast<std::size_t>(m), -1);
  std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
  LpMetadata out_meta = meta;
  out_meta.row_origin.clear();
  out_meta.row_names.clear();
  std::vector<double> rhs;
  const auto b = instance.rhs();
  for (int i = 0; i < m; ++i) {
    const RowOrigin origin = tracked ? meta.row_origin[i] : RowOrigin{i, false, true};
    if (!origin.primary) continue;
    new_index[i] = static_cast<int>(rhs.size());
    sign[i] = origin.negated ? -1.0 : 1.0;
    rhs.push_back(std::max(sign[i] * b[i], 1e-3));
    out_meta.row_origin.push_back(RowOrigin{origin.source_row, false, true});
    if (static_cast<int>(meta.row_names.size()) == m) {
      out_meta.row_names.push_back(meta.row_names[i]);
    }
  }
  std::vector<int> col_ptr{0};
  std::vector<int> row_idx;
  std::vector<double> values;
  for (int j = 0; j < n; ++j) {
    const ColumnView col = instance.column(j);
    for (std::size_t p = 0; p < col.size(); ++p) {
      const int r = new_index[col.rows[p]];
      if (r < 0) continue;
      row_idx.push_back(r);
      values.push_back(sign[col.rows[p]] * col.values[p]);
    }
    col_ptr.push_back(static_cast<int>(row_idx.size()));
  }
  std::vector<double> upper(instance.upper().begin(), instance.upper().end());
  for (double& u : upper) u = std::min(u, 100.0);
  std::vector<double> obj(instance.obj().begin(), instance.obj().end());
  const int m_out = static_cast<int>(rhs.size());
  return LpInstance::from_csc(m_out, n, std::move(col_ptr),
                              std::move(row_idx), std::move(values),
                              std::move(rhs), std::move(obj), std::move(upper),
                              std::move(out_meta));
}

}  // namespace olp
