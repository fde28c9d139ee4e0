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

#include "cbst/kb.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "cbst/errors.h"

namespace cbst {
namespace {

bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool IsMarker(std::string_view token) {
  return token == kSubjectMarker || token == kPredicateMarker ||
         token == kObjectMarker;
}

std::string NormalizeField(std::string_view field, const char* name) {
  std::string normalized = JoinTokens(SplitWhitespace(field));
  if (normalized.empty()) {
    throw DataError(std::string("triple ") + name + " is empty");
  }
  for (std::string_view marker :
       {kSubjectMarker, kPredicateMarker, kObjectMarker}) {
    if (normalized.find(marker) != std::string::npos) {
      throw DataError(std::string("triple ") + name +
                      " contains reserved marker " + std::string(marker));
    }
  }
  return normalized;
}

}  // namespace

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string ToLowerAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string NormalizeEntity(std::string_view text) {
  return ToLowerAscii(JoinTokens(SplitWhitespace(text)));
}

TokenSeq::TokenSeq(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (const std::string& token : tokens_) {
    if (token.empty() || std::any_of(token.begin(), token.end(), IsSpace)) {
      throw DataError("token '" + token + "' is empty or contains whitespace");
    }
  }
}

TokenSeq TokenSeq::FromText(std::string_view text) {
  return TokenSeq(SplitWhitespace(text));
}

Triple::Triple(std::string_view subject, std::string_view predicate,
               std::string_view object)
    : subject_(NormalizeField(subject, "subject")),
      predicate_(NormalizeField(predicate, "predicate")),
      object_(NormalizeField(object, "object")) {}

StructuredInput::StructuredInput(std::vector<Triple> triples, SourceKind kind)
    : triples_(std::move(triples)), kind_(kind) {
  if (triples_.empty()) throw DataError("structured input has no triples");
}

LabeledExample MakeLabeledExample(StructuredInput input, TokenSeq text) {
  if (text.empty()) throw DataError("labeled example has an empty text");
  return LabeledExample{std::move(input), std::move(text)};
}

TokenSeq Linearize(const StructuredInput& input) {
  std::vector<std::string> out;
  auto append = [&out](std::string_view marker, const std::string& field) {
    out.emplace_back(marker);
    for (std::string& token : SplitWhitespace(field)) {
      out.push_back(std::move(token));
    }
  };
  for (const Triple& t : input.triples()) {
    append(kSubjectMarker, t.subject());
    append(kPredicateMarker, t.predicate());
    append(kObjectMarker, t.object());
  }
  return TokenSeq(std::move(out));
}

StructuredInput ParseLinearized(const TokenSeq& seq, SourceKind kind) {
  const std::vector<std::string>& tokens = seq.tokens();
  std::vector<Triple> triples;
  size_t i = 0;
  auto read_field = [&](std::string_view marker) {
    if (i >= tokens.size() || tokens[i] != marker) {
      throw DataError("linearized sequence: expected " + std::string(marker) +
                      " at token " + std::to_string(i));
    }
    ++i;
    std::vector<std::string> field;
    while (i < tokens.size() && !IsMarker(tokens[i])) field.push_back(tokens[i++]);
    return JoinTokens(field);
  };
  while (i < tokens.size()) {
    std::string subject = read_field(kSubjectMarker);
    std::string predicate = read_field(kPredicateMarker);
    std::string object = read_field(kObjectMarker);
    triples.emplace_back(subject, predicate, object);
  }
  return StructuredInput(std::move(triples), kind);
}

std::set<std::string> ExtractEntities(const StructuredInput& input) {
  std::set<std::string> out;
  for (const Triple& t : input.triples()) {
    out.insert(NormalizeEntity(t.subject()));
    out.insert(NormalizeEntity(t.object()));
  }
  return out;
}

StructuredInput TableToInput(
    std::string_view row_entity,
    const std::vector<std::pair<std::string, std::string>>& attributes) {
  std::vector<Triple> triples;
  triples.reserve(attributes.size());
  for (const auto& [attribute, value] : attributes) {
    triples.emplace_back(row_entity, attribute, value);
  }
  return StructuredInput(std::move(triples), SourceKind::kTable);
}

}  // namespace cbst
