#include "dtg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtg/certificate.hpp"
#include "dtg/errors.hpp"
#include "dtg/oracle.hpp"
#include "dtg/perm.hpp"
#include "dtg/recognize.hpp"

namespace dtg {

namespace {

using ordered_json = nlohmann::ordered_json;

// Thrown for unreadable files so they map to the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  if (format == "edges") return parse_edge_list(text);
  if (format == "graph6") return parse_graph6(text);
  return parse_graph_auto(text);
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DTG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ordered_json embedding_json(const std::vector<Vertex>& emb) {
  ordered_json a = ordered_json::array();
  for (Vertex v : emb) a.push_back(v);
  return a;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

int cmd_recognize(const Graph& g, bool json, std::ostream& out) {
  const RecognitionResult r = recognize(g);
  const bool accept = r.verdict == Verdict::accept;
  if (json) {
    ordered_json j;
    j["verdict"] = accept ? "accept" : "reject";
    if (accept) {
      j["certificate"] = ordered_json::parse(certificate_to_json(*r.certificate));
    } else {
      j["reason"] = r.reason;
      if (r.witness) j["witness"] = {{"pattern", r.witness->pattern}, {"embedding", embedding_json(r.witness->embedding)}};
    }
    out << j.dump(2) << '\n';
  } else if (accept) {
    out << "accept\n" << certificate_to_json(*r.certificate) << '\n';
  } else {
    out << "reject: " << r.reason << '\n';
    if (r.witness) out << "witness " << r.witness->pattern << ": " << join(r.witness->embedding) << '\n';
  }
  return accept ? kExitOk : kExitReject;
}

int cmd_verify(const Graph& g, const WeightCertificate& cert, bool json, std::ostream& out) {
  const VerifyResult r = verify_certificate(g, cert);
  if (json) {
    ordered_json j;
    j["ok"] = r.ok;
    if (r.failing_pair) j["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
    out << j.dump(2) << '\n';
  } else if (r.ok) {
    out << "ok\n";
  } else {
    out << "mismatch " << r.failing_pair->first << ' ' << r.failing_pair->second << '\n';
  }
  return r.ok ? kExitOk : kExitReject;
}

int cmd_forbidden(const Graph& g, bool json, std::ostream& out) {
  const auto hits = forbidden_scan(g);
  if (json) {
    ordered_json a = ordered_json::array();
    for (const auto& h : hits) a.push_back({{"pattern", h.pattern}, {"embedding", embedding_json(h.embedding)}});
    out << a.dump(2) << '\n';
  } else {
    for (const auto& h : hits) out << h.pattern << ": " << join(h.embedding) << '\n';
    if (hits.empty()) out << "none\n";
  }
  return hits.empty() ? kExitOk : kExitReject;
}

int cmd_oracle(Vertex max_n, bool json, std::ostream& out) {
  ordered_json rows = ordered_json::array();
  bool all = true;
  for (Vertex n = 1; n <= max_n; ++n) {
    const auto graphs = enumerate_small_graphs(n);
    std::size_t accepted = 0;
    std::vector<std::string> disagree;
    for (const auto& g : graphs) {
      const bool acc = recognize(g).verdict == Verdict::accept;
      accepted += acc;
      if (acc != brute_force_dtg(g)) disagree.push_back(encode_graph6(g));
    }
    all = all && disagree.empty();
    if (json) {
      rows.push_back({{"n", n}, {"graphs", graphs.size()}, {"accepted", accepted}, {"disagreements", disagree}});
    } else {
      out << "n=" << n << " graphs=" << graphs.size() << " accepted=" << accepted
          << " disagreements=" << disagree.size() << '\n';
      for (const auto& s : disagree) out << "  " << s << '\n';
    }
  }
  if (json) out << rows.dump(2) << '\n';
  return all ? kExitOk : kExitInternal;
}

}  // namespace

CorpusRecord classify_graph(const Graph& g) {
  CorpusRecord r;
  r.n = g.order();
  r.m = g.size();
  r.threshold = is_threshold(g);
  if (auto bip = bipartition(g)) r.bipartite_permutation = bipartite_permutation_orderings(g, *bip).has_value();
  r.permutation = r.bipartite_permutation || permutation_orderings(g).has_value();
  const RecognitionResult res = recognize(g);
  r.double_threshold = res.verdict == Verdict::accept;
  if (res.witness) r.witness = res.witness->pattern;
  return r;
}

CorpusReport classify_corpus(std::istream& in, unsigned threads) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.emplace_back(no, line);
  }

  // Each slot is written by exactly one worker; the report is assembled in
  // input order afterwards.
  std::vector<std::optional<CorpusRecord>> recs(lines.size());
  std::vector<std::string> errs(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
      try {
        CorpusRecord r = classify_graph(parse_graph6(lines[i].second));
        r.line = lines[i].first;
        recs[i] = std::move(r);
      } catch (const ParseError& e) {
        errs[i] = e.what();
      } catch (const ContractError& e) {
        errs[i] = e.what();
      }
    }
  };
  const unsigned t = std::min<std::size_t>(thread_count(threads), std::max<std::size_t>(1, lines.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  CorpusReport report;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (recs[i]) {
      report.records.push_back(std::move(*recs[i]));
    } else {
      report.errors.push_back({lines[i].first, errs[i]});
    }
  }
  return report;
}

std::string format_corpus(const CorpusReport& report, bool json) {
  std::size_t th = 0, bp = 0, pe = 0, dt = 0;
  for (const auto& r : report.records) {
    th += r.threshold;
    bp += r.bipartite_permutation;
    pe += r.permutation;
    dt += r.double_threshold;
  }
  const std::size_t rejects = report.records.size() - dt;
  std::ostringstream os;
  if (json) {
    ordered_json j;
    j["records"] = ordered_json::array();
    for (const auto& r : report.records) {
      ordered_json rec = {{"line", r.line},
                          {"n", r.n},
                          {"m", r.m},
                          {"threshold", r.threshold},
                          {"bipartite_permutation", r.bipartite_permutation},
                          {"permutation", r.permutation},
                          {"double_threshold", r.double_threshold}};
      if (r.witness) rec["witness"] = *r.witness;
      j["records"].push_back(std::move(rec));
    }
    j["errors"] = ordered_json::array();
    for (const auto& e : report.errors) j["errors"].push_back({{"line", e.line}, {"message", e.message}});
    j["summary"] = {{"records", report.records.size()}, {"threshold", th},         {"bipartite_permutation", bp},
                    {"permutation", pe},                {"double_threshold", dt}, {"rejects", rejects}};
    os << j.dump(2) << '\n';
    return os.str();
  }
  for (const auto& r : report.records) {
    os << r.line << " n=" << r.n << " m=" << r.m << " threshold=" << r.threshold
       << " bipartite_permutation=" << r.bipartite_permutation << " permutation=" << r.permutation
       << " double_threshold=" << r.double_threshold;
    if (r.witness) os << " witness=" << *r.witness;
    os << '\n';
  }
  for (const auto& e : report.errors) os << "error line " << e.line << ": " << e.message << '\n';
  os << "summary records=" << report.records.size() << " threshold=" << th << " bipartite_permutation=" << bp
     << " permutation=" << pe << " double_threshold=" << dt << " rejects=" << rejects << '\n';
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double-threshold graph recognition and certification", "dtg"};
  app.require_subcommand(1);
  bool json = false;
  std::string format = "auto";
  app.add_flag("--json", json, "Structured output");
  app.add_option("--format", format, "Graph input format")
      ->check(CLI::IsMember({"auto", "edges", "graph6"}))
      ->capture_default_str();

  std::string graph_path, cert_path, corpus_path, out_fmt = "edges";
  Vertex n = 0, max_n = 6;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  auto* rec = app.add_subcommand("recognize", "Decide membership; print a certificate or a witness");
  rec->add_option("graph", graph_path, "Edge list or graph6 file")->required();
  auto* ver = app.add_subcommand("verify", "Check a certificate against a graph");
  ver->add_option("graph", graph_path)->required();
  ver->add_option("certificate", cert_path, "JSON certificate")->required();
  auto* gen = app.add_subcommand("gen", "Graph of a random certificate");
  gen->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_fmt)->check(CLI::IsMember({"edges", "graph6", "cert"}))->capture_default_str();
  auto* cor = app.add_subcommand("corpus", "Classify one graph6 graph per line");
  cor->add_option("file", corpus_path)->required();
  cor->add_option("--threads", threads, "Worker threads (default DTG_THREADS or all cores)");
  auto* ora = app.add_subcommand("oracle", "Compare recognize with brute force on all small graphs");
  ora->add_option("--max-n", max_n)->check(CLI::Range(0, 6))->capture_default_str();
  auto* forb = app.add_subcommand("forbidden", "List forbidden induced subgraphs");
  forb->add_option("graph", graph_path)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rec) return cmd_recognize(read_graph(graph_path, format), json, out);
    if (*ver) return cmd_verify(read_graph(graph_path, format), certificate_from_json(read_file(cert_path)), json, out);
    if (*gen) {
      const WeightCertificate c = random_certificate(n, seed);
      if (out_fmt == "cert") {
        out << certificate_to_json(c) << '\n';
      } else {
        const Graph g = graph_from_weights(c);
        out << (out_fmt == "graph6" ? encode_graph6(g) + "\n" : format_edge_list(g));
      }
      return kExitOk;
    }
    if (*cor) {
      std::ifstream in(corpus_path);
      if (!in) throw InputError("cannot read " + corpus_path);
      const CorpusReport report = classify_corpus(in, threads);
      out << format_corpus(report, json);
      for (const auto& e : report.errors) err << corpus_path << ":" << e.line << ": " << e.message << '\n';
      return report.errors.empty() ? kExitOk : kExitUsage;
    }
    if (*ora) return cmd_oracle(max_n, json, out);
    if (*forb) return cmd_forbidden(read_graph(graph_path, format), json, out);
  } catch (const InternalContradiction& e) {
    err << "internal contradiction: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dtg
