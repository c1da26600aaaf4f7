// Copyright 2026 The Nucleus WDE Authors
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

#ifndef WDE_ERRORS_HPP_
#define WDE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wde {

/// Base class for all toolchain errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A transform or flavor was asked to handle a size outside its domain.
class UnsupportedSizeError : public Error {
 public:
  explicit UnsupportedSizeError(const std::string& what) : Error(what) {}
};

/// No conversion rule exists between the two data-format kinds on an edge.
class UnmappableFormatError : public Error {
 public:
  UnmappableFormatError(std::string src, std::string dst, const std::string& what)
      : Error(what), src_kernel(std::move(src)), dst_kernel(std::move(dst)) {}

  std::string src_kernel;
  std::string dst_kernel;
};

/// An edge crosses PEs that the platform links cannot connect (within the
/// two-hop routing cap).
class UnroutableEdgeError : public Error {
 public:
  UnroutableEdgeError(std::string src, std::string dst, const std::string& what)
      : Error(what), src_kernel(std::move(src)), dst_kernel(std::move(dst)) {}

  std::string src_kernel;
  std::string dst_kernel;
};

}  // namespace wde

#endif  // WDE_ERRORS_HPP_
