// Copyright 2026 The PLA Authors
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

#ifndef PLA_CLI_H_
#define PLA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pla {

// Runs the command line front end. `args` includes the program name.
// Returns the process exit status: 0 iff the requested artifact was fully
// written.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace pla

#endif  // PLA_CLI_H_
