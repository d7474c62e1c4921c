// Copyright 2026 The tensorcone Authors
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

#ifndef TENSORCONE_ERRORS_HPP_
#define TENSORCONE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tcone {

// Invalid user-supplied configuration (bad Cartan type, bad parabolic, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An API precondition was violated by the caller.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant failed (non-integral structure constant, unresolvable
// facet orientation, cyclic inclusion, ...). Always indicates a bug upstream.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tcone

#endif  // TENSORCONE_ERRORS_HPP_
