// Copyright 2026 The CMS Authors
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

#ifndef CMS_ERROR_HPP_
#define CMS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cms {

enum class Errc {
  invalid_order,
  shape,
  invalid_spec,
  invalid_step,
  invalid_level,
  not_found,
  undefined_measure,
  verification_failure,
  parse,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this one exception type; the
// code distinguishes the failure class for callers that care (the CLI maps
// them to exit codes).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cms

#endif  // CMS_ERROR_HPP_
