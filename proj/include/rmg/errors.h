// Copyright 2026 The RMG Hedge Authors
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

#ifndef RMG_ERRORS_H_
#define RMG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rmg {

// Invalid player specification, experiment configuration or game view.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke the select/observe call protocol.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A table was requested for data that does not cover every pair.
class IncompleteDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rmg

#endif  // RMG_ERRORS_H_
