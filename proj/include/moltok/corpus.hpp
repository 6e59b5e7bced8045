//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_CORPUS_HPP
#define MOLTOK_CORPUS_HPP

#include <functional>
#include <ostream>
#include <string>

#include "moltok/diagnostics.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

// One description-molecule pair from a corpus file.
struct DescriptionRecord {
  std::string id;
  std::string description;
  std::string smiles;
};

enum class CorpusFormat { SmilesLines, ChebiTsv };

struct IngestStats {
  std::size_t total = 0;        // data rows seen
  std::size_t accepted = 0;
  std::size_t quarantined = 0;  // malformed rows or unparseable SMILES
};

using RecordSink =
    std::function<void(const DescriptionRecord&, const MolGraph&)>;

// Streams records from a corpus file, parsing each SMILES. Malformed
// rows are written to `quarantine` (when given) as
// `line_number<TAB>reason<TAB>content` instead of aborting the run.
//
// smiles_lines: one molecule per line, `#` comment lines ignored.
// chebi_tsv: header row then id<TAB>SMILES<TAB>description rows.
//
// Throws IoError when the file cannot be read and FormatError when the
// file is empty or most rows do not even have the expected shape.
IngestStats ingest(const std::string& path, CorpusFormat format,
                   const RecordSink& sink, std::ostream* quarantine = nullptr,
                   Diagnostics* diag = nullptr);

CorpusFormat corpus_format_from_name(const std::string& name);  // FormatError

}  // namespace moltok

#endif  // MOLTOK_CORPUS_HPP
