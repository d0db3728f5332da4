//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace disco {

// Base class for all domain errors. `code()` is a stable machine-readable
// identifier; the CLI prints it as `E_<code>` on stderr.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

}  // namespace disco
