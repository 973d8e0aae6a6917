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

#include "olp/results_csv.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <type_traits>
#include <vector>

#include "olp/error.h"

namespace olp {

const char* const kResultsHeader =
    "instance,method,K,gamma,seed,objective,violation,rel_opt,acc,rdc,rounds,"
    "wall_time_s";

namespace {

constexpr std::size_t kFields = 12;

std::string real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string optional_real(const std::optional<double>& v) {
  return v ? real(*v) : std::string();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Reads one record; returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields, int& line) {
  fields.clear();
  std::string cur;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          cur += '"';
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (ch == '\r') {
      if (in.peek() == '\n') in.get(ch);
      break;
    } else if (ch == '\n') {
      break;
    } else {
      cur += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line);
  if (!any) return false;
  fields.push_back(std::move(cur));
  return true;
}

double parse_real(const std::string& s, int line) {
  if (s.empty()) throw ParseError("missing numeric field", line);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    throw ParseError("bad number '" + s + "'", line);
  }
  return v;
}

std::optional<double> parse_optional_real(const std::string& s, int line) {
  if (s.empty()) return std::nullopt;
  return parse_real(s, line);
}

template <typename T>
T parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    T v;
    if constexpr (std::is_unsigned_v<T>) {
      v = static_cast<T>(std::stoull(s, &used));
    } else {
      v = static_cast<T>(std::stoll(s, &used));
    }
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'", line);
  }
}

}  // namespace

void write_results_csv(const std::vector<ResultRecord>& records,
                       std::ostream& out) {
  out << kResultsHeader << "\r\n";
  for (const ResultRecord& r : records) {
    out << quote(r.instance) << ',' << quote(r.method) << ',' << r.k << ','
        << real(r.gamma) << ',' << r.seed << ',' << real(r.objective) << ','
        << real(r.violation) << ',' << optional_real(r.rel_opt) << ','
        << optional_real(r.acc) << ',' << optional_real(r.rdc) << ','
        << (r.rounds ? std::to_string(*r.rounds) : std::string()) << ','
        << real(r.wall_time_s) << "\r\n";
  }
}

void write_results_csv(const std::vector<ResultRecord>& records,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_results_csv(records, out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::vector<ResultRecord> read_results_csv(std::istream& in) {
  std::vector<std::string> f;
  int line = 1;
  if (!read_record(in, f, line)) throw ParseError("empty results file", 1);
  std::string header;
  for (std::size_t i = 0; i < f.size(); ++i) header += (i ? "," : "") + f[i];
  if (header != kResultsHeader) throw ParseError("unexpected header", 1);
  std::vector<ResultRecord> out;
  while (true) {
    ++line;
    const int start = line;
    if (!read_record(in, f, line)) break;
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != kFields) {
      throw ParseError("expected 12 fields, got " + std::to_string(f.size()),
                       start);
    }
    ResultRecord r;
    r.instance = f[0];
    r.method = f[1];
    r.k = parse_int<std::int64_t>(f[2], start);
    r.gamma = parse_real(f[3], start);
    r.seed = parse_int<std::uint64_t>(f[4], start);
    r.objective = parse_real(f[5], start);
    r.violation = parse_real(f[6], start);
    r.rel_opt = parse_optional_real(f[7], start);
    r.acc = parse_optional_real(f[8], start);
    r.rdc = parse_optional_real(f[9], start);
    if (!f[10].empty()) r.rounds = parse_int<std::int64_t>(f[10], start);
    r.wall_time_s = parse_real(f[11], start);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ResultRecord> read_results_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_results_csv(in);
}

}  // namespace olp
