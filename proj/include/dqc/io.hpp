// Copyright 2026 The dqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dqc/circuit.hpp"
#include "dqc/error.hpp"
#include "dqc/native_format.hpp"
#include "dqc/real_format.hpp"

namespace dqc {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

/// `.real` files go through the RevLib reader, anything else through the
/// native reader. Unnamed circuits take the file stem as their name.
inline Circuit load_circuit(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Circuit c;
  try {
    c = path.extension() == ".real" ? parse_real(text) : parse_native(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.reason(), path.string());
  }
  if (c.name().empty()) c.set_name(path.stem().string());
  return c;
}

inline void save_circuit(const Circuit& c, const std::filesystem::path& path) {
  write_file(path, path.extension() == ".real" ? serialize_real(c) : serialize_native(c));
}

}  // namespace dqc
