// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace metroforge::toml {

/// Parses a TOML document into its JSON text representation. Supports the
/// subset used by experiment configs: comments, [tables], [[arrays of
/// tables]], dotted keys, strings, integers, floats, booleans, arrays, and
/// inline tables. Throws metroforge::ConfigError with a line number on
/// malformed input.
std::string parse_to_json(std::string_view text);

std::string parse_file_to_json(const std::string& path);

} // namespace metroforge::toml
