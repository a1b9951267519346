//
// Copyright 2026 The hetldp Authors
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
//

#ifndef HETLDP_ERRORS_HPP_
#define HETLDP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hetldp {

// Malformed or out-of-range experiment configuration (exit code 2 in the CLI).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-range input data rows (exit code 3 in the CLI).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hetldp

#endif  // HETLDP_ERRORS_HPP_
