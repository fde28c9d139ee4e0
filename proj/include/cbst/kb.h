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

// Core domain types: triples, structured inputs, token sequences, and the
// <S>/<P>/<O> linearization shared by graphs and tables.

#ifndef CBST_KB_H_
#define CBST_KB_H_

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cbst {

inline constexpr std::string_view kSubjectMarker = "<S>";
inline constexpr std::string_view kPredicateMarker = "<P>";
inline constexpr std::string_view kObjectMarker = "<O>";

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Joins tokens with single spaces.
std::string JoinTokens(const std::vector<std::string>& tokens);

// Collapses whitespace runs to single spaces and lowercases ASCII letters.
// This is the canonical form used for entity matching.
std::string NormalizeEntity(std::string_view text);

std::string ToLowerAscii(std::string_view text);

// A whitespace-delimited token sequence. No token contains whitespace.
class TokenSeq {
 public:
  TokenSeq() = default;
  // Throws DataError if any token is empty or contains whitespace.
  explicit TokenSeq(std::vector<std::string> tokens);

  static TokenSeq FromText(std::string_view text);

  const std::vector<std::string>& tokens() const { return tokens_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  std::string ToText() const { return JoinTokens(tokens_); }

  auto operator<=>(const TokenSeq&) const = default;

 private:
  std::vector<std::string> tokens_;
};

// A (subject, predicate, object) triple. Fields are stored whitespace
// normalized (single spaces, trimmed) and are never empty.
class Triple {
 public:
  // Throws DataError on an empty field or a field containing a marker token.
  Triple(std::string_view subject, std::string_view predicate,
         std::string_view object);

  const std::string& subject() const { return subject_; }
  const std::string& predicate() const { return predicate_; }
  const std::string& object() const { return object_; }

  auto operator<=>(const Triple&) const = default;

 private:
  std::string subject_;
  std::string predicate_;
  std::string object_;
};

enum class SourceKind { kGraph, kTable };

// An ordered, non-empty list of triples. Order is significant.
class StructuredInput {
 public:
  // Throws DataError when `triples` is empty.
  explicit StructuredInput(std::vector<Triple> triples,
                           SourceKind kind = SourceKind::kGraph);

  const std::vector<Triple>& triples() const { return triples_; }
  size_t size() const { return triples_.size(); }
  SourceKind source_kind() const { return kind_; }

  bool operator==(const StructuredInput&) const = default;

 private:
  std::vector<Triple> triples_;
  SourceKind kind_;
};

struct LabeledExample {
  StructuredInput input;
  TokenSeq text;  // never empty

  bool operator==(const LabeledExample&) const = default;
};

// Builds a labeled example, rejecting an empty text.
LabeledExample MakeLabeledExample(StructuredInput input, TokenSeq text);

// Emits <S> subject <P> predicate <O> object for each triple in order.
TokenSeq Linearize(const StructuredInput& input);

// Inverse of Linearize. Throws DataError on a malformed sequence.
StructuredInput ParseLinearized(const TokenSeq& seq,
                                SourceKind kind = SourceKind::kGraph);

// Canonical (lowercase, whitespace-normalized) subjects and objects.
std::set<std::string> ExtractEntities(const StructuredInput& input);

// Converts one table record (row entity plus attribute/value pairs) into a
// structured input: each attribute becomes the predicate of a triple whose
// subject is the row entity.
StructuredInput TableToInput(
    std::string_view row_entity,
    const std::vector<std::pair<std::string, std::string>>& attributes);

}  // namespace cbst

#endif  // CBST_KB_H_
