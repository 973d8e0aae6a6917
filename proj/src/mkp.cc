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

#include "olp/mkp.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "olp/error.h"
#include "olp/rng.h"

namespace olp {
namespace {

constexpr std::uint64_t kMatrixStream = 11;
constexpr std::uint64_t kMaskStream = 12;
constexpr std::uint64_t kProfitStream = 13;
constexpr std::uint64_t kJitterStream = 14;

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw InvalidConfigError("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

template <typename T>
T parse_integer(const std::string& key, const std::string& value) {
  T out = 0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw InvalidConfigError("bad value for " + key + ": '" + value + "'");
  }
  return out;
}

// Row indices of the kept entries of one column: a Bernoulli(density) subset
// of {0..m-1}, drawn by skipping geometric gaps.
void sample_rows(Rng& rng, int m, double density, std::vector<int>& rows) {
  rows.clear();
  if (density >= 1.0) {
    for (int i = 0; i < m; ++i) rows.push_back(i);
    return;
  }
  const double log_q = std::log1p(-density);
  std::int64_t i = -1;
  while (true) {
    const double u = 1.0 - rng.uniform01();  // in (0, 1]
    i += 1 + static_cast<std::int64_t>(std::floor(std::log(u) / log_q));
    if (i >= m) break;
    rows.push_back(static_cast<int>(i));
  }
}

LpInstance draw(const MkpParams& p, std::uint64_t attempt) {
  const int m = p.m;
  const int n = p.n;
  Rng values(derive_seed(p.seed, {attempt, kMatrixStream}));
  Rng mask(derive_seed(p.seed, {attempt, kMaskStream}));
  Rng profit(derive_seed(p.seed, {attempt, kProfitStream}));

  std::vector<int> col_ptr(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> row_idx;
  std::vector<double> vals;
  std::vector<double> row_sum(static_cast<std::size_t>(m), 0.0);
  std::vector<double> obj(static_cast<std::size_t>(n));
  std::vector<int> kept;
  std::vector<double> dense(static_cast<std::size_t>(m));
  const auto expected = static_cast<std::size_t>(
      std::ceil(static_cast<double>(m) * n * p.density * 1.05));
  row_idx.reserve(expected);
  vals.reserve(expected);

  for (int j = 0; j < n; ++j) {
    double col_sum = 0.0;
    if (p.rhs_before_sparsify) {
      // Every entry is drawn so the pre-zeroing row sums exist.
      for (int i = 0; i < m; ++i) {
        dense[i] = static_cast<double>(values.uniform_int(1, p.a_max));
        row_sum[i] += dense[i];
      }
      sample_rows(mask, m, p.density, kept);
      for (int i : kept) {
        row_idx.push_back(i);
        vals.push_back(dense[i]);
        col_sum += dense[i];
      }
    } else {
      sample_rows(mask, m, p.density, kept);
      for (int i : kept) {
        const double a = static_cast<double>(values.uniform_int(1, p.a_max));
        row_idx.push_back(i);
        vals.push_back(a);
        row_sum[i] += a;
        col_sum += a;
      }
    }
    col_ptr[j + 1] = static_cast<int>(row_idx.size());
    obj[j] = col_sum / m +
             static_cast<double>(profit.uniform_int(1, p.delta_max));
  }
  if (p.perturb_a3) {
    Rng jitter(derive_seed(p.seed, {attempt, kJitterStream}));
    for (double& c : obj) c += c * 1e-9 * (2.0 * jitter.uniform01() - 1.0);
  }
  std::vector<double> rhs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) rhs[i] = p.tightness / n * row_sum[i];
  LpMetadata meta;
  meta.name = p.label();
  return LpInstance::from_csc(m, n, std::move(col_ptr), std::move(row_idx),
                              std::move(vals), std::move(rhs), std::move(obj),
                              {}, std::move(meta));
}

}  // namespace

void MkpParams::validate() const {
  if (m < 1 || n < 1) throw InvalidConfigError("MKP needs m, n >= 1");
  if (!(tightness > 0.0 && tightness <= 1.0)) {
    throw InvalidConfigError("MKP tightness must lie in (0, 1]");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw InvalidConfigError("MKP density must lie in (0, 1]");
  }
  if (a_max < 1 || delta_max < 1 || max_retries < 0) {
    throw InvalidConfigError("MKP ranges must be positive");
  }
}

std::string MkpParams::label() const {
  std::ostringstream os;
  os << "mkp:m=" << m << ",n=" << n << ",tau=" << shortest(tightness)
     << ",sigma=" << shortest(density) << ",seed=" << seed;
  if (perturb_a3) os << ",a3=1";
  if (rhs_before_sparsify) os << ",pre=1";
  if (allow_zero_rhs) os << ",zrhs=1";
  if (a_max != 1000) os << ",amax=" << a_max;
  if (delta_max != 500) os << ",dmax=" << delta_max;
  return os.str();
}

MkpParams parse_mkp_params(const std::string& text) {
  std::string body = text;
  if (body.rfind("mkp:", 0) == 0) body = body.substr(4);
  MkpParams p;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InvalidConfigError("expected key=value in '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "m") {
      p.m = parse_integer<int>(key, value);
    } else if (key == "n") {
      p.n = parse_integer<int>(key, value);
    } else if (key == "tau") {
      p.tightness = parse_double(key, value);
    } else if (key == "sigma") {
      p.density = parse_double(key, value);
    } else if (key == "seed") {
      p.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "a3") {
      p.perturb_a3 = parse_integer<int>(key, value) != 0;
    } else if (key == "pre") {
      p.rhs_before_sparsify = parse_integer<int>(key, value) != 0;
    } else if (key == "zrhs") {
      p.allow_zero_rhs = parse_integer<int>(key, value) != 0;
    } else if (key == "amax") {
      p.a_max = parse_integer<int>(key, value);
    } else if (key == "dmax") {
      p.delta_max = parse_integer<int>(key, value);
    } else {
      throw InvalidConfigError("unknown generator key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

LpInstance generate_mkp(const MkpParams& params) {
  params.validate();
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    LpInstance inst = draw(params, static_cast<std::uint64_t>(attempt));
    bool ok = true;
    for (double b : inst.rhs()) ok = ok && b > 0.0;
    if (ok || params.allow_zero_rhs) return inst;
  }
  throw AssumptionError("MKP generator left an empty row after " +
                        std::to_string(params.max_retries) + " redraws");
}

}  // namespace olp
