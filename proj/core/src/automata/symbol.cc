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

#include "statefuzz/automata/symbol.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "statefuzz/errors.h"

namespace statefuzz::automata {

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!IsValidName(name_)) {
    throw InvalidSymbolError("invalid symbol name '" + name_ +
                             "': must be non-empty without whitespace or commas");
  }
}

bool Symbol::IsValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) ||
           std::iscntrl(static_cast<unsigned char>(c));
  });
}

std::ostream& operator<<(std::ostream& os, const Symbol& symbol) {
  return os << symbol.name();
}

Word MakeWord(std::initializer_list<std::string_view> names) {
  Word word;
  word.reserve(names.size());
  for (auto name : names) word.emplace_back(std::string(name));
  return word;
}

Word ParseWord(std::string_view comma_list) {
  Word word;
  if (comma_list.empty()) return word;
  std::size_t start = 0;
  while (true) {
    auto comma = comma_list.find(',', start);
    auto piece = comma_list.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    // Tolerate "A, B" as written by hand.
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    word.emplace_back(std::string(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string FormatWord(std::span<const Symbol> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += word[i].name();
  }
  return out;
}

Alphabet::Alphabet(std::initializer_list<std::string_view> names) {
  for (auto name : names) Add(Symbol(std::string(name)));
}

Alphabet::Alphabet(std::vector<Symbol> symbols) {
  for (auto& symbol : symbols) Add(symbol);
}

std::size_t Alphabet::Add(const Symbol& symbol) {
  auto [it, inserted] = index_.emplace(symbol.name(), symbols_.size());
  if (inserted) symbols_.push_back(symbol);
  return it->second;
}

bool Alphabet::Contains(const Symbol& symbol) const {
  return index_.contains(symbol.name());
}

std::optional<std::size_t> Alphabet::IndexOf(const Symbol& symbol) const {
  auto it = index_.find(symbol.name());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alphabet::IndexOrThrow(const Symbol& symbol,
                                   std::string_view role) const {
  auto index = IndexOf(symbol);
  if (!index) {
    std::ostringstream msg;
    msg << "unknown " << role << " symbol '" << symbol.name()
        << "'; alphabet is {" << FormatWord(symbols_) << "}";
    throw UnknownSymbolError(msg.str());
  }
  return *index;
}

bool Alphabet::SameSetAs(const Alphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [&](const Symbol& s) { return other.Contains(s); });
}

}  // namespace statefuzz::automata
