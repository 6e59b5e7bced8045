//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moltok/canonical.hpp"
#include "moltok/corpus.hpp"
#include "moltok/ensemble.hpp"
#include "moltok/errors.hpp"
#include "moltok/metrics.hpp"
#include "moltok/motif.hpp"
#include "moltok/smiles.hpp"
#include "moltok/training.hpp"
#include "moltok/vocab.hpp"

using json = nlohmann::json;
using namespace moltok;

namespace {

struct OutputFile {
  std::ofstream file;
  std::ostream* stream = nullptr;

  explicit OutputFile(const std::string& path) {
    if (path == "-") {
      stream = &std::cout;
      return;
    }
    file.open(path);
    if (!file)
      throw IoError("cannot open '" + path + "' for writing");
    stream = &file;
  }
  std::ostream& out() { return *stream; }
};

void summary(const std::string& key, const std::string& value) {
  std::cerr << key << '=' << value << '\n';
}
void summary(const std::string& key, std::size_t value) {
  summary(key, std::to_string(value));
}

TraversalOrder order_from_name(const std::string& name) {
  return name == "bfs" ? TraversalOrder::BFS : TraversalOrder::DFS;
}

std::string default_quarantine(const std::string& in,
                               const std::string& explicit_path) {
  return explicit_path.empty() ? in + ".quarantine" : explicit_path;
}

struct CorpusArgs {
  std::string in;
  std::string format = "smiles_lines";
  std::string quarantine;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs* args) {
  cmd->add_option("--in", args->in, "input corpus file")->required();
  cmd->add_option("--format", args->format, "corpus format")
      ->check(CLI::IsMember({"smiles_lines", "chebi_tsv"}));
  cmd->add_option("--quarantine", args->quarantine,
                  "sidecar for rejected rows (default <in>.quarantine)");
}

IngestStats run_ingest(const CorpusArgs& args, const RecordSink& sink) {
  std::ofstream quarantine(default_quarantine(args.in, args.quarantine));
  IngestStats stats = ingest(args.in, corpus_format_from_name(args.format),
                             sink, &quarantine);
  summary("rows", stats.total);
  summary("accepted", stats.accepted);
  summary("quarantined", stats.quarantined);
  return stats;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0)
      os << ' ';
    os << values[i];
  }
  return os.str();
}

int cmd_tokenize(const CorpusArgs& corpus, const std::string& out_path,
                 const std::string& order) {
  OutputFile out(out_path);
  TraversalOrder ord = order_from_name(order);
  run_ingest(corpus, [&](const DescriptionRecord&, const MolGraph& mol) {
    out.out() << sequence_to_line(tokenize(mol, ord)) << '\n';
  });
  return 0;
}

int cmd_detokenize(const std::string& in_path, const std::string& out_path,
                   const std::string& order,
                   const std::string& quarantine_path) {
  std::ifstream in(in_path);
  if (!in)
    throw IoError("cannot open '" + in_path + "'");
  std::ofstream quarantine(default_quarantine(in_path, quarantine_path));
  OutputFile out(out_path);
  TraversalOrder ord = order_from_name(order);
  std::string line;
  std::size_t line_no = 0, ok = 0, bad = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    try {
      TokenSequence seq = sequence_from_line(line, ord);
      out.out() << write_smiles(detokenize(seq)) << '\n';
      ++ok;
    } catch (const Error& e) {
      ++bad;
      quarantine << line_no << '\t' << e.what() << '\t' << line << '\n';
    }
  }
  summary("rows", ok + bad);
  summary("accepted", ok);
  summary("quarantined", bad);
  return 0;
}

int cmd_build_vocab(const CorpusArgs& corpus, const std::string& out_path) {
  VocabBuilder builder;
  run_ingest(corpus, [&](const DescriptionRecord&, const MolGraph& mol) {
    builder.add(mol);
  });
  Vocabulary vocab = builder.finish();
  vocab.save(out_path);
  summary("distinct_molecules", builder.molecule_count());
  summary("motif_tokens", static_cast<std::size_t>(vocab.motif_token_count()));
  summary("vocab_size", static_cast<std::size_t>(vocab.size()));
  return 0;
}

int cmd_encode(const CorpusArgs& corpus, const std::string& vocab_path,
               const std::string& out_path, const std::string& order) {
  Vocabulary vocab = Vocabulary::load(vocab_path);
  OutputFile out(out_path);
  TraversalOrder ord = order_from_name(order);
  std::size_t unk = 0;
  run_ingest(corpus, [&](const DescriptionRecord&, const MolGraph& mol) {
    std::vector<int> ids = vocab.encode(tokenize(mol, ord));
    for (int id : ids)
      if (id == Vocabulary::kUnkId)
        ++unk;
    out.out() << join_numbers(ids) << '\n';
  });
  summary("unk_tokens", unk);
  return 0;
}

int cmd_stats(const CorpusArgs& corpus, const std::string& order) {
  TraversalOrder ord = order_from_name(order);
  std::size_t n = 0, multi_atom_motif_molecules = 0;
  std::size_t max_atoms = 0, max_tokens = 0;
  double sum_atoms = 0, sum_tokens = 0;
  std::size_t compression_violations = 0;
  run_ingest(corpus, [&](const DescriptionRecord&, const MolGraph& mol) {
    TokenSequence seq = tokenize(mol, ord);
    std::size_t atoms = static_cast<std::size_t>(mol.atom_count());
    std::size_t tokens = seq.tokens.size();
    ++n;
    sum_atoms += static_cast<double>(atoms);
    sum_tokens += static_cast<double>(tokens);
    max_atoms = std::max(max_atoms, atoms);
    max_tokens = std::max(max_tokens, tokens);
    if (tokens > atoms)
      ++compression_violations;
    for (const Motif& t : seq.tokens)
      if (t.atom_count() > 1) {
        ++multi_atom_motif_molecules;
        break;
      }
  });
  // the distribution report is this command's output, not bookkeeping
  std::printf("molecules=%zu\n", n);
  std::printf("mean_atoms=%.6f\n", n ? sum_atoms / static_cast<double>(n) : 0.0);
  std::printf("mean_tokens=%.6f\n",
              n ? sum_tokens / static_cast<double>(n) : 0.0);
  std::printf("max_atoms=%zu\n", max_atoms);
  std::printf("max_tokens=%zu\n", max_tokens);
  std::printf("tokens_per_atom=%.6f\n",
              sum_atoms > 0 ? sum_tokens / sum_atoms : 0.0);
  std::printf("multi_atom_motif_fraction=%.6f\n",
              n ? static_cast<double>(multi_atom_motif_molecules) /
                      static_cast<double>(n)
                : 0.0);
  std::printf("compression_violations=%zu\n", compression_violations);
  return 0;
}

int cmd_prepare(const CorpusArgs& corpus, const std::string& vocab_path,
                const std::string& out_path, const std::string& order,
                std::uint64_t seed, double rate, double mean_span) {
  Vocabulary vocab = Vocabulary::load(vocab_path);
  OutputFile out(out_path);
  TraversalOrder ord = order_from_name(order);
  std::size_t ordinal = 0;
  run_ingest(corpus, [&](const DescriptionRecord&, const MolGraph& mol) {
    std::vector<int> ids = vocab.encode(tokenize(mol, ord));
    CorruptedPair pair = span_corrupt(ids, seed + ordinal, rate, mean_span);
    std::vector<double> weights = importance_weights(pair.target_ids, vocab);
    out.out() << join_numbers(pair.input_ids) << '\t'
              << join_numbers(pair.target_ids) << '\t' << join_numbers(weights)
              << '\n';
    ++ordinal;
  });
  summary("instances", ordinal);
  return 0;
}

int cmd_eval(const std::string& pairs_path, int radius, int max_path_len,
             int nbits) {
  std::ifstream in(pairs_path);
  if (!in)
    throw IoError("cannot open '" + pairs_path + "'");
  std::vector<std::pair<GenerationResult, MolGraph>> pairs;
  std::string line;
  std::size_t line_no = 0, skipped = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      std::cerr << "eval: line " << line_no << ": expected two columns\n";
      ++skipped;
      continue;
    }
    std::string ref_smiles = line.substr(0, tab);
    std::string gen_smiles = line.substr(tab + 1);
    MolGraph ref;
    try {
      ref = parse_smiles(ref_smiles);
    } catch (const Error& e) {
      std::cerr << "eval: line " << line_no
                << ": reference does not parse: " << e.what() << '\n';
      ++skipped;
      continue;
    }
    GenerationResult gen;
    if (gen_smiles != "INVALID") {
      try {
        gen.mol = parse_smiles(gen_smiles);
      } catch (const Error&) {
        gen = GenerationResult::invalid();
      }
    }
    pairs.emplace_back(std::move(gen), std::move(ref));
  }
  EvalParams params;
  params.morgan_radius = radius;
  params.path_max_len = max_path_len;
  params.nbits = nbits;
  EvalReport report = evaluate(pairs, params);
  std::printf("%8s %8s %8s %8s %8s\n", "n", "exact", "morgan", "path",
              "validity");
  std::printf("%8d %8.4f %8.4f %8.4f %8.4f\n", report.n, report.exact,
              report.morgan, report.path, report.validity);
  std::printf("n=%d\nexact=%.6f\nmorgan=%.6f\npath=%.6f\nvalidity=%.6f\n",
              report.n, report.exact, report.morgan, report.path,
              report.validity);
  summary("skipped_rows", skipped);
  return 0;
}

int cmd_ensemble(const std::string& in_path, const std::string& out_path,
                 int radius, int max_path_len, int nbits) {
  std::ifstream in(in_path);
  if (!in)
    throw IoError("cannot open '" + in_path + "'");
  OutputFile out(out_path);

  std::string line;
  std::size_t line_no = 0, records = 0, no_valid = 0, bad = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    json result;
    try {
      json record = json::parse(line);
      result["id"] = record.value("id", std::to_string(line_no));

      std::vector<Candidate> candidates;
      std::vector<std::string> smiles_of;
      for (const auto& c : record.at("candidates")) {
        Candidate cand;
        cand.model =
            c.value("model", "model" + std::to_string(candidates.size()));
        std::string smiles = c.contains("smiles") && !c.at("smiles").is_null()
                                 ? c.at("smiles").get<std::string>()
                                 : "INVALID";
        if (smiles != "INVALID") {
          try {
            cand.molecule.mol = parse_smiles(smiles);
          } catch (const Error&) {
            cand.molecule = GenerationResult::invalid();
          }
        }
        if (c.contains("logprobs"))
          for (const auto& v : c.at("logprobs"))
            cand.token_logprobs.values.push_back(v.get<double>());
        candidates.push_back(std::move(cand));
        smiles_of.push_back(smiles);
      }

      std::optional<MolGraph> reference;
      if (record.contains("reference") && !record.at("reference").is_null())
        reference = parse_smiles(record.at("reference").get<std::string>());

      Selection sel = select(candidates);
      json table = json::array();
      for (std::size_t i = 0; i < sel.table.size(); ++i) {
        json row;
        row["model"] = sel.table[i].model;
        row["valid"] = sel.table[i].valid;
        if (sel.table[i].confidence)
          row["confidence"] = *sel.table[i].confidence;
        if (reference) {
          GenerationResult& gen = candidates[i].molecule;
          row["exact"] = gen.valid() && exact_match(*gen.mol, *reference);
          row["morgan"] =
              gen.valid()
                  ? tanimoto(morgan_fingerprint(*gen.mol, radius, nbits),
                             morgan_fingerprint(*reference, radius, nbits))
                  : 0.0;
          row["path"] =
              gen.valid()
                  ? tanimoto(path_fingerprint(*gen.mol, max_path_len, nbits),
                             path_fingerprint(*reference, max_path_len, nbits))
                  : 0.0;
        }
        table.push_back(std::move(row));
      }
      result["candidates"] = std::move(table);
      result["winner"] = {
          {"model", sel.table[static_cast<std::size_t>(sel.winner)].model},
          {"smiles", smiles_of[static_cast<std::size_t>(sel.winner)]},
          {"confidence",
           *sel.table[static_cast<std::size_t>(sel.winner)].confidence}};
      ++records;
    } catch (const NoValidCandidateError&) {
      result["error"] = "no_valid_candidate";
      ++no_valid;
    } catch (const std::exception& e) {
      result["error"] = e.what();
      ++bad;
    }
    out.out() << result.dump() << '\n';
  }
  summary("records", records);
  summary("no_valid_candidate", no_valid);
  summary("bad_records", bad);
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"motif-level molecule tokenization toolkit"};
  app.require_subcommand(1);

  std::string out_path = "-";
  std::string order = "dfs";
  std::string vocab_path;
  std::string in_path;
  std::uint64_t seed = 0;
  double rate = 0.15, mean_span = 3.0;
  int radius = 2, max_path_len = 7, nbits = 2048;
  CorpusArgs corpus;

  auto* tok = app.add_subcommand("tokenize",
                                 "fragment molecules into motif token lines");
  add_corpus_options(tok, &corpus);
  tok->add_option("--out", out_path, "output file ('-' for stdout)");
  tok->add_option("--order", order, "traversal order")
      ->check(CLI::IsMember({"dfs", "bfs"}));

  auto* detok = app.add_subcommand("detokenize",
                                   "rebuild molecules from motif token lines");
  detok->add_option("--in", in_path, "token line file")->required();
  detok->add_option("--out", out_path, "output file ('-' for stdout)");
  detok->add_option("--order", order, "traversal order")
      ->check(CLI::IsMember({"dfs", "bfs"}));
  std::string detok_quarantine;
  detok->add_option("--quarantine", detok_quarantine,
                    "sidecar for rejected lines");

  auto* bv = app.add_subcommand("build-vocab",
                                "collect the motif vocabulary of a corpus");
  add_corpus_options(bv, &corpus);
  std::string vocab_out;
  bv->add_option("--out", vocab_out, "vocabulary file to write")->required();

  auto* enc = app.add_subcommand("encode", "corpus to token id lines");
  add_corpus_options(enc, &corpus);
  enc->add_option("--vocab", vocab_path, "vocabulary file")
      ->envname("MOLTOK_VOCAB")
      ->required();
  enc->add_option("--out", out_path, "output file ('-' for stdout)");
  enc->add_option("--order", order, "traversal order")
      ->check(CLI::IsMember({"dfs", "bfs"}));

  auto* st = app.add_subcommand(
      "stats", "token-count vs atom-count distribution of a corpus");
  add_corpus_options(st, &corpus);
  st->add_option("--order", order, "traversal order")
      ->check(CLI::IsMember({"dfs", "bfs"}));

  auto* prep = app.add_subcommand(
      "prepare", "span-corrupted training instances with importance weights");
  add_corpus_options(prep, &corpus);
  prep->add_option("--vocab", vocab_path, "vocabulary file")
      ->envname("MOLTOK_VOCAB")
      ->required();
  prep->add_option("--out", out_path, "output file ('-' for stdout)");
  prep->add_option("--order", order, "traversal order")
      ->check(CLI::IsMember({"dfs", "bfs"}));
  prep->add_option("--seed", seed, "base RNG seed (line ordinal is added)");
  prep->add_option("--rate", rate, "corruption rate in (0,1)");
  prep->add_option("--mean-span", mean_span, "mean masked span length");

  auto* ev = app.add_subcommand(
      "eval", "metrics over reference<TAB>generated SMILES pairs");
  std::string pairs_path;
  ev->add_option("--pairs", pairs_path, "TSV of reference, generated")
      ->required();
  ev->add_option("--radius", radius, "Morgan fingerprint radius");
  ev->add_option("--max-path-len", max_path_len,
                 "path fingerprint bond limit");
  ev->add_option("--nbits", nbits, "fingerprint length (power of two)");

  auto* ens = app.add_subcommand(
      "ensemble", "confidence-based selection over candidate JSON lines");
  ens->add_option("--in", in_path, "JSONL candidate records")->required();
  ens->add_option("--out", out_path, "output file ('-' for stdout)");
  ens->add_option("--radius", radius, "Morgan fingerprint radius");
  ens->add_option("--max-path-len", max_path_len,
                  "path fingerprint bond limit");
  ens->add_option("--nbits", nbits, "fingerprint length (power of two)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tok->parsed())
      return cmd_tokenize(corpus, out_path, order);
    if (detok->parsed())
      return cmd_detokenize(in_path, out_path, order, detok_quarantine);
    if (bv->parsed())
      return cmd_build_vocab(corpus, vocab_out);
    if (enc->parsed())
      return cmd_encode(corpus, vocab_path, out_path, order);
    if (st->parsed())
      return cmd_stats(corpus, order);
    if (prep->parsed())
      return cmd_prepare(corpus, vocab_path, out_path, order, seed, rate,
                         mean_span);
    if (ev->parsed())
      return cmd_eval(pairs_path, radius, max_path_len, nbits);
    if (ens->parsed())
      return cmd_ensemble(in_path, out_path, radius, max_path_len, nbits);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
