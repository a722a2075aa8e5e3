#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dtg/graph.hpp"

namespace dtg {

enum ExitCode : int { kExitOk = 0, kExitReject = 1, kExitUsage = 2, kExitInternal = 3 };

struct CorpusRecord {
  std::size_t line = 0;  ///< 1-based input line
  Vertex n = 0;
  std::int64_t m = 0;
  bool threshold = false;
  bool bipartite_permutation = false;
  bool permutation = false;
  bool double_threshold = false;
  std::optional<std::string> witness;  ///< forbidden pattern, rejects only
};

struct CorpusError {
  std::size_t line = 0;
  std::string message;
};

struct CorpusReport {
  std::vector<CorpusRecord> records;  ///< input order
  std::vector<CorpusError> errors;
};

CorpusRecord classify_graph(const Graph& g);

/// One graph6 string per line; blank lines are skipped. threads == 0 reads
/// DTG_THREADS, falling back to the hardware concurrency.
CorpusReport classify_corpus(std::istream& in, unsigned threads = 0);

/// Plain text: one record per line, then a summary line. Byte-identical for
/// identical input.
std::string format_corpus(const CorpusReport& report, bool json);

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtg
