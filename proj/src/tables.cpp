// Copyright 2026 The latdel Authors
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

#include "latdel/tables.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>

#include "latdel/bounds.hpp"
#include "latdel/codebook.hpp"
#include "latdel/codes_gf2.hpp"
#include "latdel/codes_z4.hpp"
#include "latdel/error.hpp"
#include "latdel/series.hpp"

namespace latdel {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 10);
  if (ec != std::errc{}) throw ConstructionError("cannot format double");
  return std::string(buf, ptr);
}

template <typename T>
std::string cell(const T& v) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return v.str();
  } else {
    return std::to_string(v);
  }
}

bool keep_row(const TableSpec& spec, std::int64_t r, std::int64_t N) {
  if (spec.r && *spec.r != r) return false;
  if (spec.N_min && N < *spec.N_min) return false;
  if (spec.N_max && N > *spec.N_max) return false;
  return true;
}

// The r-blocks of the nu tables: N runs over `count` values from n r in
// steps of `step`.
struct Block {
  std::int64_t r;
  std::int64_t first_N;
  std::int64_t step;
  std::int64_t count;
  std::int64_t last_N() const { return first_N + step * (count - 1); }
};

void nu_rows(CsvDocument& doc, const TableSpec& spec,
             const std::function<NuSeries(std::int64_t r, std::size_t degree)>& make_nu,
             const std::vector<Block>& blocks, bool with_hat, const std::string* label) {
  for (const auto& b : blocks) {
    if (spec.r && *spec.r != b.r) continue;
    const auto nu = make_nu(b.r, static_cast<std::size_t>(b.last_N()));
    for (std::int64_t k = 0; k < b.count; ++k) {
      const std::int64_t N = b.first_N + k * b.step;
      if (!keep_row(spec, b.r, N)) continue;
      std::vector<std::string> row;
      if (label) row.push_back(*label);
      row.push_back(cell(b.r));
      row.push_back(cell(N));
      row.push_back(cell(nu.coefficient(static_cast<std::size_t>(N))));
      if (with_hat) row.push_back(cell(hat_coefficient(nu, N)));
      doc.rows.push_back(std::move(row));
    }
  }
}

CsvDocument table_I(const TableSpec& spec) {
  const auto code = build_binary_code(spec.code.value_or("extended_hamming_8"));
  const auto dist = weight_distribution(code);
  CsvDocument doc{{"r", "N", "nu", "nu_hat"}, {}};
  nu_rows(doc, spec,
          [&](std::int64_t r, std::size_t degree) {
            return nu_series(dist, code.name(), r, degree);
          },
          {{1, 8, 2, 15}, {2, 16, 2, 15}}, true, nullptr);
  return doc;
}

CsvDocument table_II(const TableSpec& spec) {
  const auto code = build_z4_code(spec.code.value_or("klemm(8)"));
  const auto cwe = complete_weight_enumerator(code);
  CsvDocument doc{{"r", "N", "nu", "nu_hat"}, {}};
  nu_rows(doc, spec,
          [&](std::int64_t r, std::size_t degree) {
            return nu_series(cwe, code.name(), r, degree);
          },
          {{1, 8, 4, 15}, {2, 16, 4, 15}}, true, nullptr);
  return doc;
}

CsvDocument table_III(const TableSpec& spec) {
  CsvDocument doc{{"lattice", "r", "N", "nu"}, {}};
  struct Entry {
    std::string label;
    std::string code;
    std::int64_t n;
  };
  const std::vector<Entry> entries{{"BW16", "bw16_code", 16}, {"Lambda24", "golay_z4", 24}};
  for (const auto& e : entries) {
    if (spec.code && *spec.code != e.code && *spec.code != e.label) continue;
    const auto cwe = complete_weight_enumerator(build_z4_code(e.code));
    nu_rows(doc, spec,
            [&](std::int64_t r, std::size_t degree) {
              return nu_series(cwe, e.code, r, degree);
            },
            {{1, e.n, 4, 15}, {2, 2 * e.n, 4, 15}}, false, &e.label);
  }
  return doc;
}

CsvDocument table_IV(const TableSpec&) {
  const auto book = generate(8, 12, 1);
  CsvDocument doc{{"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"}, {}};
  for (const auto& w : book.words) {
    std::vector<std::string> row;
    for (auto v : w) row.push_back(cell(v));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

CsvDocument table_V(const TableSpec&) {
  const auto nodes = count_search_nodes(8, 12, 1);
  CsvDocument doc{{"level", "nodes", "upper_bound"}, {}};
  for (std::int64_t level = 2; level <= 7; ++level) {
    doc.rows.push_back({cell(level), cell(nodes[static_cast<std::size_t>(level - 1)]),
                        cell(naive_node_bound(8, 12, 1, level))});
  }
  return doc;
}

CsvDocument table_VI(const TableSpec& spec) {
  CsvDocument doc{{"N", "nodes_level7", "nodes_level6", "upper_bound_level6"}, {}};
  for (std::int64_t N = 8; N <= 64; N += 4) {
    if (!keep_row(spec, 1, N)) continue;
    const auto nodes = count_search_nodes(8, N, 1);
    doc.rows.push_back(
        {cell(N), cell(nodes[6]), cell(nodes[5]), cell(naive_node_bound(8, N, 1, 6))});
  }
  return doc;
}

CsvDocument bound_table(const TableSpec& spec, std::int64_t n, const std::string& code_name,
                        std::int64_t first_offset, std::int64_t rows_per_block) {
  const auto code = build_z4_code(spec.code.value_or(code_name));
  const auto cwe = complete_weight_enumerator(code);
  CsvDocument doc{{"r", "N", "I", "nu", "S"}, {}};
  for (std::int64_t r = 2; r <= 4; ++r) {
    if (spec.r && *spec.r != r) continue;
    const std::int64_t first = n * r + first_offset;
    const std::int64_t last = first + 4 * (rows_per_block - 1);
    const auto nu = nu_series(cwe, code.name(), r, static_cast<std::size_t>(last));
    for (std::int64_t N = first; N <= last; N += 4) {
      if (!keep_row(spec, r, N)) continue;
      doc.rows.push_back({cell(r), cell(N), cell(gilbert_lower(n, 4, N, r)),
                          cell(nu.coefficient(static_cast<std::size_t>(N))),
                          cell(hamming_upper(n, 4, N, r))});
    }
  }
  return doc;
}

CsvDocument figure(const std::vector<double>& etas) {
  CsvDocument doc{{"r", "eta", "delta", "lower", "upper"}, {}};
  const auto deltas = delta_grid(0.01, 1.0);
  for (const auto& p : curve_emit(2, etas, deltas)) {
    doc.rows.push_back({cell(p.r), format_double(p.eta), format_double(p.delta),
                        format_double(p.lower), format_double(p.upper)});
  }
  return doc;
}

bool is_integer_cell(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_decimal_cell(const std::string& s, double& value) {
  if (s.find_first_of(".eE") == std::string::npos) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string CsvDocument::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

CsvDocument CsvDocument::parse(std::string_view text) {
  CsvDocument doc;
  bool first = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    for (;;) {
      const auto comma = line.find(',');
      cells.emplace_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (first) {
      doc.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != doc.header.size()) throw ParameterError("ragged CSV row");
      doc.rows.push_back(std::move(cells));
    }
  }
  return doc;
}

TableId parse_table_id(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "I") return TableId::I;
  if (t == "II") return TableId::II;
  if (t == "III") return TableId::III;
  if (t == "IV") return TableId::IV;
  if (t == "V") return TableId::V;
  if (t == "VI") return TableId::VI;
  if (t == "VII") return TableId::VII;
  if (t == "VIII") return TableId::VIII;
  if (t == "FIG1") return TableId::fig1;
  if (t == "FIG2") return TableId::fig2;
  throw ParameterError("unknown table id: " + std::string(text));
}

std::string to_string(TableId id) {
  switch (id) {
    case TableId::I: return "I";
    case TableId::II: return "II";
    case TableId::III: return "III";
    case TableId::IV: return "IV";
    case TableId::V: return "V";
    case TableId::VI: return "VI";
    case TableId::VII: return "VII";
    case TableId::VIII: return "VIII";
    case TableId::fig1: return "fig1";
    case TableId::fig2: return "fig2";
  }
  return "?";
}

bool is_integer_table(TableId id) { return id != TableId::fig1 && id != TableId::fig2; }

CsvDocument reproduce_table(const TableSpec& spec) {
  switch (spec.id) {
    case TableId::I: return table_I(spec);
    case TableId::II: return table_II(spec);
    case TableId::III: return table_III(spec);
    case TableId::IV: return table_IV(spec);
    case TableId::V: return table_V(spec);
    case TableId::VI: return table_VI(spec);
    case TableId::VII: return bound_table(spec, 8, "klemm(8)", 8, 15);
    case TableId::VIII: return bound_table(spec, 16, "bw16_code", 4, 16);
    case TableId::fig1: return figure({0.2, 0.4, 0.5, 0.6, 0.8});
    case TableId::fig2: return figure({0.1, 0.3, 0.5, 0.7, 0.9});
  }
  throw ParameterError("unknown table id");
}

DiffResult golden_diff(const CsvDocument& generated, const CsvDocument& golden, double tolerance) {
  if (generated.header != golden.header) throw SchemaError("CSV headers differ");
  const std::size_t rows = std::min(generated.rows.size(), golden.rows.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < golden.header.size(); ++j) {
      const auto& got = generated.rows[i][j];
      const auto& want = golden.rows[i][j];
      double got_v = 0;
      double want_v = 0;
      const bool got_int = is_integer_cell(got);
      const bool want_int = is_integer_cell(want);
      const bool got_dec = !got_int && is_decimal_cell(got, got_v);
      const bool want_dec = !want_int && is_decimal_cell(want, want_v);
      if ((got_int && want_dec) || (got_dec && want_int)) {
        throw SchemaError("row " + std::to_string(i + 1) + ", column " + golden.header[j] +
                          ": integer vs decimal cell");
      }
      const bool same = got_dec && want_dec ? std::fabs(got_v - want_v) <= tolerance : got == want;
      if (!same) {
        return {false, "row " + std::to_string(i + 1) + ", column " + golden.header[j] +
                           ": expected " + want + ", got " + got};
      }
    }
  }
  if (generated.rows.size() != golden.rows.size()) {
    return {false, "row count differs: expected " + std::to_string(golden.rows.size()) +
                       ", got " + std::to_string(generated.rows.size())};
  }
  return {true, "ok"};
}

}  // namespace latdel
