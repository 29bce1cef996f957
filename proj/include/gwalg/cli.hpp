/*
   Copyright 2026 The gwalg Authors

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

#ifndef GWALG_CLI_HPP
#define GWALG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gwalg {

/// Runs the gwa command line on args (program name excluded).
/// Returns 0 on success, 1 on domain errors, 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The subcommand names, in help order.
const std::vector<std::string>& cli_commands();

}  // namespace gwalg

#endif
