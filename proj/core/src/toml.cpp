// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metroforge/errors.hpp"

namespace metroforge::toml {

namespace {

using nlohmann::json;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  json parse() {
    root_ = json::object();
    current_ = &root_;
    while (!at_end()) {
      skip_whitespace_and_comments(true);
      if (at_end())
        break;
      if (peek() == '[')
        parse_table_header();
      else
        parse_key_value(*current_);
      skip_whitespace_and_comments(false);
      if (!at_end() && peek() == '\n') {
        advance();
        ++line_;
      } else if (!at_end()) {
        fail("expected end of line");
      }
    }
    return root_;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char advance() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ConfigError("toml parse error at line " + std::to_string(line_) + ": " + message);
  }

  void skip_whitespace_and_comments(bool cross_lines) {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n')
          advance();
      } else if (c == '\n' && cross_lines) {
        advance();
        ++line_;
      } else {
        break;
      }
    }
  }

  std::string parse_key_segment() {
    skip_whitespace_and_comments(false);
    if (at_end())
      fail("expected key");
    if (peek() == '"')
      return parse_basic_string();
    std::string key;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')
        key.push_back(advance());
      else
        break;
    }
    if (key.empty())
      fail("empty key");
    return key;
  }

  std::vector<std::string> parse_dotted_key() {
    std::vector<std::string> parts{parse_key_segment()};
    skip_whitespace_and_comments(false);
    while (!at_end() && peek() == '.') {
      advance();
      parts.push_back(parse_key_segment());
      skip_whitespace_and_comments(false);
    }
    return parts;
  }

  void parse_table_header() {
    advance(); // '['
    const bool array_of_tables = !at_end() && peek() == '[';
    if (array_of_tables)
      advance();
    const std::vector<std::string> path = parse_dotted_key();
    if (at_end() || advance() != ']')
      fail("unterminated table header");
    if (array_of_tables && (at_end() || advance() != ']'))
      fail("unterminated array-of-tables header");

    json* node = &root_;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool last = i + 1 == path.size();
      json& slot = (*node)[path[i]];
      if (last && array_of_tables) {
        if (slot.is_null())
          slot = json::array();
        if (!slot.is_array())
          fail("redefinition of key '" + path[i] + "' as array of tables");
        slot.push_back(json::object());
        node = &slot.back();
      } else {
        if (slot.is_null())
          slot = json::object();
        if (slot.is_array())
          node = &slot.back();
        else if (slot.is_object())
          node = &slot;
        else
          fail("key '" + path[i] + "' is not a table");
      }
    }
    current_ = node;
  }

  void parse_key_value(json& table) {
    const std::vector<std::string> path = parse_dotted_key();
    skip_whitespace_and_comments(false);
    if (at_end() || advance() != '=')
      fail("expected '=' after key");
    skip_whitespace_and_comments(false);
    json value = parse_value();

    json* node = &table;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      json& slot = (*node)[path[i]];
      if (slot.is_null())
        slot = json::object();
      if (!slot.is_object())
        fail("key '" + path[i] + "' is not a table");
      node = &slot;
    }
    if (node->contains(path.back()))
      fail("duplicate key '" + path.back() + "'");
    (*node)[path.back()] = std::move(value);
  }

  json parse_value() {
    skip_whitespace_and_comments(false);
    if (at_end())
      fail("expected a value");
    const char c = peek();
    if (c == '"')
      return parse_basic_string();
    if (c == '[')
      return parse_array();
    if (c == '{')
      return parse_inline_table();
    return parse_scalar();
  }

  std::string parse_basic_string() {
    advance(); // opening quote
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n')
        fail("unterminated string");
      char c = advance();
      if (c == '"')
        break;
      if (c == '\\') {
        if (at_end())
          fail("dangling escape");
        const char esc = advance();
        switch (esc) {
        case 'n':
          out.push_back('\n');
          break;
        case 't':
          out.push_back('\t');
          break;
        case 'r':
          out.push_back('\r');
          break;
        case '"':
          out.push_back('"');
          break;
        case '\\':
          out.push_back('\\');
          break;
        default:
          fail("unsupported escape sequence");
        }
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  json parse_array() {
    advance(); // '['
    json arr = json::array();
    while (true) {
      skip_whitespace_and_comments(true);
      if (at_end())
        fail("unterminated array");
      if (peek() == ']') {
        advance();
        break;
      }
      arr.push_back(parse_value());
      skip_whitespace_and_comments(true);
      if (at_end())
        fail("unterminated array");
      if (peek() == ',') {
        advance();
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
    return arr;
  }

  json parse_inline_table() {
    advance(); // '{'
    json table = json::object();
    skip_whitespace_and_comments(false);
    if (!at_end() && peek() == '}') {
      advance();
      return table;
    }
    while (true) {
      parse_key_value(table);
      skip_whitespace_and_comments(false);
      if (at_end())
        fail("unterminated inline table");
      const char c = advance();
      if (c == '}')
        break;
      if (c != ',')
        fail("expected ',' or '}' in inline table");
    }
    return table;
  }

  json parse_scalar() {
    std::string token;
    while (!at_end()) {
      const char c = peek();
      if (c == '\n' || c == '#' || c == ',' || c == ']' || c == '}' || c == ' ' || c == '\t' ||
          c == '\r')
        break;
      token.push_back(advance());
    }
    if (token == "true")
      return json(true);
    if (token == "false")
      return json(false);
    if (token.empty())
      fail("expected a value");

    // Integers may carry underscores; anything with '.', 'e', 'E', inf or nan
    // is a float.
    std::string digits;
    for (char c : token)
      if (c != '_')
        digits.push_back(c);
    const bool is_float = digits.find_first_of(".eE") != std::string::npos ||
                          digits.find("inf") != std::string::npos ||
                          digits.find("nan") != std::string::npos;
    try {
      std::size_t used = 0;
      if (is_float) {
        const double v = std::stod(digits, &used);
        if (used != digits.size())
          fail("malformed float '" + token + "'");
        return json(v);
      }
      const long long v = std::stoll(digits, &used);
      if (used != digits.size())
        fail("malformed integer '" + token + "'");
      return json(v);
    } catch (const std::invalid_argument&) {
      fail("malformed value '" + token + "'");
    } catch (const std::out_of_range&) {
      fail("value out of range '" + token + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  json root_;
  json* current_ = nullptr;
};

} // namespace

std::string parse_to_json(std::string_view text) { return Parser(text).parse().dump(); }

std::string parse_file_to_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_to_json(buffer.str());
}

} // namespace metroforge::toml
