// Copyright 2026 The qgraph Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgraph {

/// A vertex or qubit index outside the current register/graph.
class IndexError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Operands violate an operation's precondition (a == b, overlapping sets,
/// FX on adjacent vertices, malformed permutation).
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects that must agree in size do not.
class ShapeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A copy source ran dry before an algorithm finished.
class ResourceExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Internal inconsistency: the simulation produced something the math forbids.
class IntegrityError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Malformed text input. The message always carries `file:line: `.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string file, std::size_t line, const std::string &what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), file_(std::move(file)), line_(line) {
    }
    const std::string &file() const {
        return file_;
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::string file_;
    std::size_t line_;
};

}  // namespace qgraph
