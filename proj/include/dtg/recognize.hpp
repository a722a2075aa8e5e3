#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtg/certificate.hpp"
#include "dtg/graph.hpp"

namespace dtg {

enum class Verdict { accept, reject };

struct Witness {
  std::string pattern;
  std::vector<Vertex> embedding;
};

struct RecognitionResult {
  Verdict verdict = Verdict::reject;
  std::optional<WeightCertificate> certificate;  ///< accept only, always verified
  std::optional<Witness> witness;                ///< reject only, best effort
  std::string reason;                            ///< reject only
};

struct RecognizeOptions {
  /// Look for a forbidden induced subgraph on reject when n is at most this.
  Vertex witness_limit = 64;
};

RecognitionResult recognize(const Graph& g, const RecognizeOptions& options = {});

}  // namespace dtg
