// Copyright 2026 The statefuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STATEFUZZ_AUTOMATA_SYMBOL_H_
#define STATEFUZZ_AUTOMATA_SYMBOL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace statefuzz::automata {

// One abstract message (input) or response class (output). Names are
// non-empty and free of whitespace, commas and line breaks so they can be
// written verbatim into DOT labels, comma lists and log lines.
class Symbol {
 public:
  explicit Symbol(std::string name);

  const std::string& name() const { return name_; }

  static bool IsValidName(std::string_view name);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const Symbol& symbol);

using Word = std::vector<Symbol>;

// Builds a word from symbol names; throws InvalidSymbolError.
Word MakeWord(std::initializer_list<std::string_view> names);
Word ParseWord(std::string_view comma_list);
std::string FormatWord(std::span<const Symbol> word);

// Ordered set of symbols. The order is significant: it drives every
// tie-break (witnesses, access sequences, enumeration order).
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string_view> names);
  explicit Alphabet(std::vector<Symbol> symbols);

  // Appends `symbol` unless present; returns its index either way.
  std::size_t Add(const Symbol& symbol);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const Symbol& operator[](std::size_t index) const { return symbols_[index]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool Contains(const Symbol& symbol) const;
  std::optional<std::size_t> IndexOf(const Symbol& symbol) const;
  // Throws UnknownSymbolError naming `role` ("input", "output").
  std::size_t IndexOrThrow(const Symbol& symbol, std::string_view role) const;

  // Order-insensitive comparison.
  bool SameSetAs(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace statefuzz::automata

template <>
struct std::hash<statefuzz::automata::Symbol> {
  std::size_t operator()(const statefuzz::automata::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.name());
  }
};

#endif  // STATEFUZZ_AUTOMATA_SYMBOL_H_
