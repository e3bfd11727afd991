// Copyright 2026 The catlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATLINK_CLI_HPP_
#define CATLINK_CLI_HPP_

#include <string>
#include <vector>

namespace catlink {

// Dispatches one command given argv-style arguments without the program
// name.  Human-readable report goes to stdout; `--json-out <path>` writes a
// machine-readable mirror of the same values.  Returns the process exit
// code: 0 success or positive verdict, 1 error, 2 negative verdict.
int run_cli(const std::vector<std::string>& args);

}  // namespace catlink

#endif  // CATLINK_CLI_HPP_
