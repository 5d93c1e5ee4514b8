// Copyright 2026 The itervote Authors
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

#ifndef ITERVOTE_CLI_DOT_HPP_
#define ITERVOTE_CLI_DOT_HPP_

#include <string>

#include "itervote/analysis.hpp"

namespace itervote::cli {

// Graphviz rendering: sinks get a double border, edges are labeled
// `voter:action`; with `highlight_cycles`, edges inside a strongly connected
// component are bold.
std::string export_dot(const BetterReplyGraph& graph, bool highlight_cycles = false);

}  // namespace itervote::cli

#endif  // ITERVOTE_CLI_DOT_HPP_
