// Copyright 2026 The wgstate Authors
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

#ifndef WGS_ERROR_HPP
#define WGS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wgs {

enum class Errc {
  invalid_site,
  invalid_pair,
  invalid_argument,
  subset_too_large,
  not_a_graph_state,
  not_positive_semidefinite,
  dimension_mismatch,
  too_large,
  config,
};

const char *errc_name(Errc code) noexcept;

/// Exception type thrown by every wgstate routine. The code lets callers and
/// tests distinguish failure classes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wgs

#endif  // WGS_ERROR_HPP
