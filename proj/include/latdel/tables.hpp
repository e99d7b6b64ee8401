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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace latdel {

struct CsvDocument {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Comma-separated, header first, LF line endings.
  std::string str() const;
  /// ParameterError on ragged rows.
  static CsvDocument parse(std::string_view text);
};

enum class TableId { I, II, III, IV, V, VI, VII, VIII, fig1, fig2 };

inline constexpr TableId kAllTables[] = {TableId::I,  TableId::II,  TableId::III,  TableId::IV,
                                         TableId::V,  TableId::VI,  TableId::VII,  TableId::VIII,
                                         TableId::fig1, TableId::fig2};

/// Accepts "I".."VIII", "fig1", "fig2" (case-insensitive roman numerals).
TableId parse_table_id(std::string_view text);
std::string to_string(TableId id);
/// Integer tables have golden files; figure data does not.
bool is_integer_table(TableId id);

struct TableSpec {
  TableId id = TableId::I;
  std::optional<std::int64_t> r;      // keep a single r block
  std::optional<std::int64_t> N_min;  // row filters on N
  std::optional<std::int64_t> N_max;
  std::optional<std::string> code;    // replaces the base code (I, II) or picks the lattice (III)
};

/// Rebuilds one table from the library:
///   I    r,N,nu,nu_hat        A(H_8), r = 1, 2
///   II   r,N,nu,nu_hat        A(K_8), r = 1, 2
///   III  lattice,r,N,nu       BW16 and Lambda24, r = 1, 2
///   IV   c1..c8               C(8, 4, 12, 1)
///   V    level,nodes,upper_bound
///   VI   N,nodes_level7,nodes_level6,upper_bound_level6
///   VII  r,N,I,nu,S           n = 8, d = 4, r = 2, 3, 4
///   VIII r,N,I,nu,S           n = 16, d = 4, r = 2, 3, 4
///   fig1/fig2 r,eta,delta,lower,upper
CsvDocument reproduce_table(const TableSpec& spec);

struct DiffResult {
  bool pass = false;
  std::string message;
};

/// Cell-by-cell comparison: integers exactly, decimals within `tolerance`.
/// SchemaError if the headers differ or a cell is an integer on one side and
/// a decimal on the other.
DiffResult golden_diff(const CsvDocument& generated, const CsvDocument& golden,
                       double tolerance = 1e-6);

}  // namespace latdel
