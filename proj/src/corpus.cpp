//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/corpus.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "moltok/errors.hpp"
#include "moltok/smiles.hpp"

namespace moltok {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = s.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, tab - start));
    start = tab + 1;
  }
}

void quarantine_row(std::ostream* quarantine, std::size_t line_no,
                    const std::string& reason, const std::string& content) {
  if (quarantine != nullptr)
    *quarantine << line_no << '\t' << reason << '\t' << content << '\n';
}

}  // namespace

CorpusFormat corpus_format_from_name(const std::string& name) {
  if (name == "smiles_lines")
    return CorpusFormat::SmilesLines;
  if (name == "chebi_tsv")
    return CorpusFormat::ChebiTsv;
  throw FormatError("unknown corpus format '" + name + "'");
}

IngestStats ingest(const std::string& path, CorpusFormat format,
                   const RecordSink& sink, std::ostream* quarantine,
                   Diagnostics* diag) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open '" + path + "'");

  IngestStats stats;
  std::size_t bad_shape = 0;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || trim(line).empty())
      continue;

    DescriptionRecord record;
    if (format == CorpusFormat::SmilesLines) {
      std::string content = trim(line);
      if (content[0] == '#')
        continue;
      ++stats.total;
      record.id = std::to_string(line_no);
      record.smiles = content;
    } else {
      if (!header_seen) {
        header_seen = true;
        continue;
      }
      ++stats.total;
      std::vector<std::string> cols = split_tabs(line);
      if (cols.size() != 3) {
        ++bad_shape;
        ++stats.quarantined;
        quarantine_row(quarantine, line_no,
                       "expected 3 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       line);
        continue;
      }
      record.id = trim(cols[0]);
      record.smiles = trim(cols[1]);
      record.description = cols[2];
    }

    try {
      MolGraph mol = parse_smiles(record.smiles, diag);
      sink(record, mol);
      ++stats.accepted;
    } catch (const Error& e) {
      ++stats.quarantined;
      quarantine_row(quarantine, line_no, e.what(), record.smiles);
    }
  }

  if (stats.total == 0)
    throw FormatError("'" + path + "' contains no data rows");
  if (format == CorpusFormat::ChebiTsv && 2 * bad_shape > stats.total)
    throw FormatError("'" + path + "' does not look like a 3-column TSV: " +
                      std::to_string(bad_shape) + " of " +
                      std::to_string(stats.total) + " rows malformed");
  return stats;
}

}  // namespace moltok
