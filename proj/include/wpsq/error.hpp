/*
   Copyright 2026 The wpsq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace wpsq {

enum class Errc {
  not_prime,
  bad_extension_degree,
  field_too_large,
  invalid_weights,
  zero_vector,
  budget_exceeded,
  syntax,
  not_homogeneous,
  index_out_of_range,
  coefficient_not_in_field,
  empty_basis,
  zero_polynomial,
  precondition,
  io,
};

const char* errc_name(Errc code) noexcept;

// Every user-facing failure in the library is reported as an Error; the code
// lets front ends tell usage problems apart without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wpsq
