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

// Command-line front end: series, codebooks, decoding, bounds, channel
// simulation and table reproduction. Exit codes: 0 ok, 1 domain error,
// 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latdel/bounds.hpp"
#include "latdel/channel.hpp"
#include "latdel/codebook.hpp"
#include "latdel/codes_gf2.hpp"
#include "latdel/codes_z4.hpp"
#include "latdel/decoder.hpp"
#include "latdel/error.hpp"
#include "latdel/runlength.hpp"
#include "latdel/series.hpp"
#include "latdel/tables.hpp"

namespace {

using namespace latdel;

IntVector parse_vector(const std::string& text) {
  std::istringstream in(text);
  IntVector out;
  std::int64_t v = 0;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw ParameterError("not a list of integers: " + text);
  return out;
}

std::string join(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

bool is_binary_code_name(const std::string& name) {
  return name == "extended_hamming_8" || name == "H8" || name.starts_with("reed_muller") ||
         name.starts_with("repetition") || name.starts_with("even_weight");
}

struct NuOptions {
  std::string code;
  std::int64_t r = 1;
  std::int64_t from = 0;
  std::int64_t to = 40;
  std::int64_t step = 1;
  bool hat = false;
};

int run_nu(const NuOptions& o) {
  if (o.step < 1 || o.from < 0 || o.to < o.from) throw ParameterError("bad N range");
  const auto degree = static_cast<std::size_t>(o.to);
  const NuSeries nu = is_binary_code_name(o.code)
                          ? nu_series(build_binary_code(o.code), o.r, degree)
                          : nu_series(build_z4_code(o.code), o.r, degree);
  std::cout << "# code=" << nu.tag.code_name << " m=" << nu.tag.modulus << " r=" << o.r
            << " construction=" << (o.hat ? "hat" : "plain") << '\n'
            << "N,coefficient\n";
  for (std::int64_t N = o.from; N <= o.to; N += o.step) {
    const BigInt value = o.hat ? hat_coefficient(nu, N) : nu.coefficient(static_cast<std::size_t>(N));
    std::cout << N << ',' << value << '\n';
  }
  return 0;
}

struct CodebookOptions {
  std::int64_t n = 8;
  std::int64_t N = 12;
  std::int64_t r = 1;
  std::string out;
};

int run_codebook(const CodebookOptions& o) {
  const auto book = generate(o.n, o.N, o.r);
  if (o.out.empty()) {
    write_codebook(std::cout, book);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw ParameterError("cannot open " + o.out);
    write_codebook(file, book);
  }
  return 0;
}

struct DecodeOptions {
  std::string codebook;
  std::string received;
  std::string word;
  std::string coset;
};

int run_decode(const DecodeOptions& o) {
  std::ifstream file(o.codebook);
  if (!file) throw ParameterError("cannot open codebook " + o.codebook);
  const auto book = read_codebook(file);
  IntVector x;
  if (!o.word.empty()) {
    x = raw_runs(BinaryWord::parse(o.word));
  } else {
    x = parse_vector(o.received);
  }
  if (static_cast<std::int64_t>(x.size()) != book.n) {
    throw ParameterError("received vector has " + std::to_string(x.size()) + " runs, codebook n=" +
                         std::to_string(book.n));
  }
  const auto trace = o.coset.empty() ? decode(x, book.N) : decode(x, book.N, parse_vector(o.coset));
  std::cout << "received: " << join(trace.input) << '\n'
            << "coset_rep: " << join(trace.coset_rep) << '\n'
            << "branch: " << to_string(trace.branch) << '\n';
  if (trace.projection_index) std::cout << "index: " << *trace.projection_index + 1 << '\n';
  std::cout << "additions: " << trace.additions_used << '\n'
            << "parity_tests: " << trace.parity_tests_used << '\n';
  if (!trace.success) {
    std::cout << "status: failure (" << trace.failure_reason << ")\n";
    return 1;
  }
  std::cout << "decoded: " << join(trace.output) << '\n' << "status: ok\n";
  return 0;
}

struct BoundsOptions {
  std::int64_t n = 8;
  std::int64_t d = 4;
  std::int64_t r = 2;
  std::int64_t from = 24;
  std::int64_t to = 80;
  std::int64_t step = 4;
  std::string code;
};

int run_bounds(const BoundsOptions& o) {
  if (o.step < 1 || o.to < o.from) throw ParameterError("bad N range");
  std::optional<NuSeries> nu;
  if (!o.code.empty()) {
    const auto degree = static_cast<std::size_t>(std::max<std::int64_t>(o.to, 0));
    nu = is_binary_code_name(o.code) ? nu_series(build_binary_code(o.code), o.r, degree)
                                     : nu_series(build_z4_code(o.code), o.r, degree);
    if (static_cast<std::int64_t>(nu->tag.dimension) != o.n) {
      throw ParameterError("code length does not match n");
    }
  }
  std::cout << "N,I,nu_lower,S,johnson,theorem_domain\n";
  for (std::int64_t N = o.from; N <= o.to; N += o.step) {
    std::optional<BigInt> nu_lower;
    if (nu && N >= 0) nu_lower = nu->coefficient(static_cast<std::size_t>(N));
    const auto rep = bound_report(o.n, o.d, N, o.r, nu_lower);
    std::cout << N << ',' << rep.gilbert_lower << ',' << (rep.nu_lower ? rep.nu_lower->str() : "")
              << ',' << rep.hamming_upper << ','
              << (rep.johnson_upper ? rep.johnson_upper->str() : "") << ','
              << (rep.in_theorem_domain ? 1 : 0) << '\n';
  }
  return 0;
}

struct AsymptoticOptions {
  std::int64_t r = 2;
  std::vector<double> etas{0.2, 0.4, 0.5, 0.6, 0.8};
  double delta_step = 0.01;
  double delta_max = 1.0;
};

int run_asymptotic(const AsymptoticOptions& o) {
  const auto deltas = delta_grid(o.delta_step, o.delta_max);
  const auto rows = curve_emit(o.r, o.etas, deltas);
  std::cout << "r,eta,delta,lower,upper\n";
  std::cout.setf(std::ios::fixed);
  std::cout.precision(10);
  for (const auto& p : rows) {
    std::cout << p.r << ',' << p.eta << ',' << p.delta << ',' << p.lower << ',' << p.upper << '\n';
  }
  return 0;
}

struct SimulateOptions {
  std::int64_t n = 8;
  std::int64_t N = 20;
  std::int64_t r = 2;
  std::size_t t = 1;
  std::string model = "exhaustive";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
};

int run_simulate(const SimulateOptions& o) {
  const auto book = generate(o.n, o.N, o.r);
  const ChannelConfig config{o.t, parse_channel_model(o.model), o.seed, o.trials};
  const auto report = run_pipeline(book, config);
  std::cout << report.to_json().dump(2) << '\n';
  std::cerr << report.summary() << '\n';
  return 0;
}

struct TablesOptions {
  std::vector<std::string> ids;
  bool all = false;
  std::string out_dir;
  std::string check_dir;
};

int run_tables(const TablesOptions& o) {
  std::vector<TableId> ids;
  if (o.all) {
    ids.assign(std::begin(kAllTables), std::end(kAllTables));
  } else {
    for (const auto& s : o.ids) ids.push_back(parse_table_id(s));
  }
  if (ids.empty()) throw ParameterError("give --id or --all");
  int status = 0;
  for (auto id : ids) {
    const auto doc = reproduce_table({id});
    const std::string file_name = "table_" + to_string(id) + ".csv";
    if (!o.check_dir.empty()) {
      if (!is_integer_table(id)) {
        std::cout << "SKIP " << to_string(id) << " (no golden values)\n";
        continue;
      }
      std::ifstream golden_file(std::filesystem::path(o.check_dir) / file_name);
      if (!golden_file) throw ParameterError("missing golden file " + file_name);
      std::stringstream buf;
      buf << golden_file.rdbuf();
      const auto result = golden_diff(doc, CsvDocument::parse(buf.str()));
      std::cout << (result.pass ? "PASS " : "FAIL ") << to_string(id) << ": " << result.message
                << '\n';
      if (!result.pass) status = 1;
    } else if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      std::ofstream out(std::filesystem::path(o.out_dir) / file_name, std::ios::binary);
      out << doc.str();
    } else {
      if (ids.size() > 1) std::cout << "# table " << to_string(id) << '\n';
      std::cout << doc.str();
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice codes for the binary deletion channel"};
  app.require_subcommand(1);

  NuOptions nu;
  auto* nu_cmd = app.add_subcommand("nu", "Coefficients of the shifted nu-series of A(C)");
  nu_cmd->add_option("--code", nu.code, "Base code, e.g. extended_hamming_8, klemm(8), golay_z4")
      ->required();
  nu_cmd->add_option("--r", nu.r, "Minimum coordinate");
  nu_cmd->add_option("--from", nu.from, "First N");
  nu_cmd->add_option("--to", nu.to, "Last N");
  nu_cmd->add_option("--step", nu.step, "Step in N");
  nu_cmd->add_flag("--hat", nu.hat, "Hat construction (appended coordinate)");

  CodebookOptions cb;
  auto* cb_cmd = app.add_subcommand("codebook", "Generate C(n,4,N,r) from A(K_n)");
  cb_cmd->add_option("--n", cb.n, "Number of runs")->required();
  cb_cmd->add_option("--N", cb.N, "Word length")->required();
  cb_cmd->add_option("--r", cb.r, "Minimum run length")->required();
  cb_cmd->add_option("--out", cb.out, "Output file (default stdout)");

  DecodeOptions dec;
  auto* dec_cmd = app.add_subcommand("decode", "Decode a received run vector");
  dec_cmd->add_option("--codebook", dec.codebook, "Codebook file")->required();
  auto* rec_opt = dec_cmd->add_option("--received", dec.received, "Run vector, e.g. \"3 2 1 1\"");
  auto* word_opt = dec_cmd->add_option("--word", dec.word, "Received binary word");
  rec_opt->excludes(word_opt);
  dec_cmd->add_option("--coset", dec.coset, "Coset representative (default: by parity)");

  std::string encode_word;
  auto* enc_cmd = app.add_subcommand("encode", "Binary word to run vector");
  enc_cmd->add_option("--word", encode_word, "ASCII 0/1 word")->required();

  std::string runs_text;
  auto* dr_cmd = app.add_subcommand("decode-runs", "Run vector to binary word");
  dr_cmd->add_option("--runs", runs_text, "Space-separated run lengths")->required();

  BoundsOptions bo;
  auto* bo_cmd = app.add_subcommand("bounds", "Gilbert/Hamming/Johnson values per N");
  bo_cmd->add_option("--n", bo.n, "Dimension");
  bo_cmd->add_option("--d", bo.d, "Minimum distance");
  bo_cmd->add_option("--r", bo.r, "Minimum coordinate");
  bo_cmd->add_option("--from", bo.from, "First N");
  bo_cmd->add_option("--to", bo.to, "Last N");
  bo_cmd->add_option("--step", bo.step, "Step in N");
  bo_cmd->add_option("--code", bo.code, "Base code for the nu_lower column");

  AsymptoticOptions as;
  auto* as_cmd = app.add_subcommand("asymptotic", "Curve data f(r, eta, delta)");
  as_cmd->add_option("--r", as.r, "Minimum run length");
  as_cmd->add_option("--eta", as.etas, "Values of eta")->expected(1, -1);
  as_cmd->add_option("--delta-step", as.delta_step, "Grid step in delta");
  as_cmd->add_option("--delta-max", as.delta_max, "Last delta");

  SimulateOptions si;
  auto* si_cmd = app.add_subcommand("simulate", "Encode, delete, decode pipeline");
  si_cmd->add_option("--n", si.n, "Number of runs");
  si_cmd->add_option("--N", si.N, "Word length");
  si_cmd->add_option("--r", si.r, "Minimum run length");
  si_cmd->add_option("--t", si.t, "Maximum deletions per word");
  si_cmd->add_option("--model", si.model, "exhaustive | uniform_random");
  si_cmd->add_option("--seed", si.seed, "RNG seed");
  si_cmd->add_option("--trials", si.trials, "Trials (uniform_random)");

  TablesOptions tb;
  auto* tb_cmd = app.add_subcommand("tables", "Reproduce tables I-VIII and figure data");
  tb_cmd->add_option("--id", tb.ids, "Table id: I..VIII, fig1, fig2");
  tb_cmd->add_flag("--all", tb.all, "Every table");
  tb_cmd->add_option("--out-dir", tb.out_dir, "Write table_<id>.csv files here");
  tb_cmd->add_option("--check", tb.check_dir, "Compare against golden CSVs in this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*nu_cmd) return run_nu(nu);
    if (*cb_cmd) return run_codebook(cb);
    if (*dec_cmd) return run_decode(dec);
    if (*enc_cmd) {
      std::cout << phi(BinaryWord::parse(encode_word)).str() << '\n';
      return 0;
    }
    if (*dr_cmd) {
      std::cout << phi_inverse(RunVector(parse_vector(runs_text))).str() << '\n';
      return 0;
    }
    if (*bo_cmd) return run_bounds(bo);
    if (*as_cmd) return run_asymptotic(as);
    if (*si_cmd) return run_simulate(si);
    if (*tb_cmd) return run_tables(tb);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
