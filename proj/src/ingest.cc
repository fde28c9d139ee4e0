// Copyright 2026 The cbst Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbst/ingest.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>

#include "cbst/errors.h"
#include "json.hpp"

namespace cbst {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& name, size_t line,
                       const std::string& msg) {
  throw DataError(name + ":" + std::to_string(line) + ": " + msg);
}

StructuredInput ReadTriples(const json& record) {
  auto it = record.find("triples");
  if (it == record.end()) throw DataError("missing \"triples\" field");
  if (!it->is_array()) throw DataError("\"triples\" is not an array");
  std::vector<Triple> triples;
  for (const json& t : *it) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() ||
        !t[1].is_string() || !t[2].is_string()) {
      throw DataError("each triple must be an array of 3 strings");
    }
    triples.emplace_back(t[0].get<std::string>(), t[1].get<std::string>(),
                         t[2].get<std::string>());
  }
  return StructuredInput(std::move(triples));
}

TokenSeq ReadText(const json& record) {
  auto it = record.find("text");
  if (it == record.end()) throw DataError("missing \"text\" field");
  if (!it->is_string()) throw DataError("\"text\" is not a string");
  TokenSeq text = TokenSeq::FromText(it->get<std::string>());
  if (text.empty()) throw DataError("\"text\" is empty");
  return text;
}

// Calls `fn` on every non-blank line parsed as a JSON object, rewrapping any
// error with the file name and 1-based line number.
void ForEachRecord(std::istream& in, const std::string& name,
                   const std::function<void(const json&)>& fn) {
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (SplitWhitespace(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      Fail(name, lineno, std::string("malformed record: ") + e.what());
    }
    if (!record.is_object()) Fail(name, lineno, "record is not an object");
    try {
      fn(record);
    } catch (const DataError& e) {
      Fail(name, lineno, e.what());
    } catch (const json::exception& e) {
      Fail(name, lineno, e.what());
    }
  }
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

json TriplesJson(const StructuredInput& input) {
  json triples = json::array();
  for (const Triple& t : input.triples()) {
    triples.push_back({t.subject(), t.predicate(), t.object()});
  }
  return triples;
}

}  // namespace

LabeledDataset ParseLabeled(std::istream& in, const std::string& name) {
  LabeledDataset data{name, {}};
  ForEachRecord(in, name, [&](const json& record) {
    StructuredInput input = ReadTriples(record);
    data.examples.push_back(MakeLabeledExample(std::move(input), ReadText(record)));
  });
  return data;
}

LabeledDataset ParseLabeled(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseLabeled(in, path.string());
}

UnlabeledDataset ParseUnlabeled(std::istream& in, const std::string& name) {
  UnlabeledDataset data{name, {}};
  ForEachRecord(in, name, [&](const json& record) {
    if (record.contains("text")) throw DataError("unexpected text field");
    data.inputs.push_back(ReadTriples(record));
  });
  return data;
}

UnlabeledDataset ParseUnlabeled(const std::filesystem::path& path) {
  std::ifstream in = OpenOrThrow(path);
  return ParseUnlabeled(in, path.string());
}

std::vector<PseudoLabeledExample> ParsePseudoLabeled(std::istream& in,
                                                     const std::string& name) {
  std::vector<PseudoLabeledExample> rows;
  ForEachRecord(in, name, [&](const json& record) {
    PseudoLabeledExample row{ReadTriples(record), ReadText(record)};
    row.logprob = record.at("logprob").get<double>();
    row.coverage = record.at("coverage").get<double>();
    row.iteration = record.at("iteration").get<int>();
    if (!std::isfinite(row.logprob)) throw DataError("logprob is not finite");
    if (!(row.coverage >= 0.0 && row.coverage <= 1.0)) {
      throw DataError("coverage outside [0, 1]");
    }
    if (row.iteration < 1) throw DataError("iteration must be >= 1");
    rows.push_back(std::move(row));
  });
  return rows;
}

void WriteLabeled(std::ostream& out, const LabeledDataset& data) {
  for (const LabeledExample& ex : data.examples) {
    json record = {{"triples", TriplesJson(ex.input)},
                   {"text", ex.text.ToText()}};
    out << record.dump() << '\n';
  }
}

void WriteUnlabeled(std::ostream& out, const UnlabeledDataset& data) {
  for (const StructuredInput& input : data.inputs) {
    out << json{{"triples", TriplesJson(input)}}.dump() << '\n';
  }
}

void WritePseudoLabeled(std::ostream& out,
                        const std::vector<PseudoLabeledExample>& rows) {
  for (const PseudoLabeledExample& row : rows) {
    json record = {{"triples", TriplesJson(row.input)},
                   {"text", row.text.ToText()},
                   {"logprob", row.logprob},
                   {"coverage", row.coverage},
                   {"iteration", row.iteration}};
    out << record.dump() << '\n';
  }
}

UnlabeledDataset FilterByEntityOverlap(const UnlabeledDataset& unlabeled,
                                       const LabeledDataset& labeled) {
  if (labeled.examples.empty()) {
    throw DataError("entity-overlap filter needs a non-empty labeled dataset");
  }
  std::set<std::string> vocabulary;
  for (const LabeledExample& ex : labeled.examples) {
    vocabulary.merge(ExtractEntities(ex.input));
  }
  UnlabeledDataset out{unlabeled.name, {}};
  for (const StructuredInput& input : unlabeled.inputs) {
    for (const std::string& entity : ExtractEntities(input)) {
      if (vocabulary.count(entity) != 0) {
        out.inputs.push_back(input);
        break;
      }
    }
  }
  return out;
}

}  // namespace cbst
