// Copyright 2026 The tropfst Authors.
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
//
// Batch command runner behind the `tropfst` tool. Argument parsing lives in
// tools/; this header only executes an already parsed command so that it can
// be driven from tests.
//
// Exit status: 0 on success, 1 on domain errors (negative cycle, unknown
// symbol, invalid machine, emptied trellis), 2 on usage and parse errors.

#ifndef TROPFST_CLI_HPP_
#define TROPFST_CLI_HPP_

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tropfst/decoder.hpp"
#include "tropfst/errors.hpp"
#include "tropfst/matrix_io.hpp"
#include "tropfst/observation.hpp"
#include "tropfst/text_format.hpp"
#include "tropfst/transforms.hpp"
#include "tropfst/wfst.hpp"

namespace tropfst {
namespace cli {

enum class Command { kPush, kRmEpsilon, kDecode, kMetrics, kInfo, kValidate };

struct CommandConfig {
  Command command = Command::kInfo;
  std::string input;
  std::string output;        // push, rmepsilon; "-" is standard output
  std::string obs_path;      // decode, metrics
  std::string seq_path;      // decode, metrics
  std::optional<double> theta;
  std::string metrics_path;  // decode, metrics; "-" or empty: see Run()
  bool trim = false;         // rmepsilon
  bool dump_matrix = false;  // info
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace internal {

inline std::ifstream OpenInput(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

inline Wfst ReadMachine(const std::string &path) {
  auto in = OpenInput(path);
  return ParseText(in);
}

template <typename Writer>
void WriteOutput(const std::string &path, std::ostream &out, Writer &&write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
  if (!file) throw UsageError("error writing '" + path + "'");
}

inline std::string JoinLabels(const SymbolTable &syms,
                              const std::vector<Label> &labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) s += ' ';
    s += syms.Symbol(labels[i]);
  }
  return s;
}

inline void PrintDecode(std::ostream &out, const Wfst &m,
                        const DecodeResult &r) {
  out << "cost " << FormatWeight(r.cost) << '\n';
  out << "states";
  for (StateId s : r.states) out << ' ' << s;
  out << '\n';
  out << "ilabels";
  if (!r.ilabels.empty()) out << ' ' << JoinLabels(m.isyms(), r.ilabels);
  out << '\n';
  out << "olabels";
  if (!r.olabels.empty()) out << ' ' << JoinLabels(m.osyms(), r.olabels);
  out << '\n';
}

inline int RunDecode(const CommandConfig &cfg, std::ostream &out) {
  const Wfst m = ReadMachine(cfg.input);
  ObservationModel obs = [&] {
    auto in = OpenInput(cfg.obs_path);
    return ParseObservationModel(in);
  }();
  std::vector<std::string> seq = [&] {
    auto in = OpenInput(cfg.seq_path);
    return ParseSequence(in);
  }();
  const bool metrics_only = cfg.command == Command::kMetrics;
  if (metrics_only && !cfg.theta)
    throw UsageError("metrics requires --theta");
  if (!cfg.metrics_path.empty() && !cfg.theta)
    throw UsageError("--metrics requires --theta");
  if (cfg.theta && !(*cfg.theta >= 0.0))
    throw UsageError("--theta must be >= 0");

  if (!cfg.theta) {
    PrintDecode(out, m, ViterbiDecode(m, obs, seq));
    return kExitOk;
  }
  const MetricsTrace trace = DecodeWithMetrics(m, obs, seq, *cfg.theta);
  if (metrics_only) {
    WriteOutput(cfg.metrics_path, out, [&](std::ostream &os) {
      WriteMetricsCsv(os, trace.steps);
    });
    return kExitOk;
  }
  PrintDecode(out, m, trace.decode);
  if (!cfg.metrics_path.empty()) {
    WriteOutput(cfg.metrics_path, out, [&](std::ostream &os) {
      WriteMetricsCsv(os, trace.steps);
    });
  }
  return kExitOk;
}

inline int RunInfo(const CommandConfig &cfg, std::ostream &out) {
  const Wfst m = ReadMachine(cfg.input);
  CheckWellFormed(m);
  std::size_t initial = 0, final = 0;
  for (StateId s = 0; s < m.num_states(); ++s) {
    initial += m.lambda()[s].is_pos_inf() ? 0 : 1;
    final += m.rho()[s].is_pos_inf() ? 0 : 1;
  }
  out << "states " << m.num_states() << '\n'
      << "arcs " << m.arcs().size() << '\n'
      << "epsilon_arcs " << m.NumEpsilonArcs() << '\n'
      << "initial_states " << initial << '\n'
      << "final_states " << final << '\n'
      << "pushed " << (IsPushed(m, 1e-9) ? "yes" : "no") << '\n';
  if (cfg.dump_matrix) WriteMatrix(out, BuildMatrices(m).a);
  return kExitOk;
}

inline int RunValidate(const CommandConfig &cfg, std::ostream &out) {
  const Wfst m = ReadMachine(cfg.input);
  const ValidationReport report = Validate(m);
  for (const auto &v : report.violations) out << v.message << '\n';
  return report.ok() ? kExitOk : kExitDomain;
}

}  // namespace internal

inline int Run(const CommandConfig &cfg, std::ostream &out,
               std::ostream &err) {
  try {
    switch (cfg.command) {
      case Command::kPush: {
        const Wfst pushed = PushWeights(internal::ReadMachine(cfg.input));
        internal::WriteOutput(cfg.output, out, [&](std::ostream &os) {
          SerializeText(os, pushed);
        });
        return kExitOk;
      }
      case Command::kRmEpsilon: {
        Wfst result = RemoveEpsilons(internal::ReadMachine(cfg.input));
        if (cfg.trim) result = Trim(result);
        internal::WriteOutput(cfg.output, out, [&](std::ostream &os) {
          SerializeText(os, result);
        });
        return kExitOk;
      }
      case Command::kDecode:
      case Command::kMetrics:
        return internal::RunDecode(cfg, out);
      case Command::kInfo:
        return internal::RunInfo(cfg, out);
      case Command::kValidate:
        return internal::RunValidate(cfg, out);
    }
  } catch (const UsageError &e) {
    err << "tropfst: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "tropfst: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "tropfst: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cli
}  // namespace tropfst

#endif  // TROPFST_CLI_HPP_
