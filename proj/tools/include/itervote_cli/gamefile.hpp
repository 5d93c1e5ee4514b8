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

#ifndef ITERVOTE_CLI_GAMEFILE_HPP_
#define ITERVOTE_CLI_GAMEFILE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "itervote/game_form.hpp"

namespace itervote::cli {

// Parsed game file. Preferences are optional so that a file can describe a
// bare game form.
struct GameFile {
  GameForm form;
  std::optional<std::vector<PreferenceOrder>> prefs;
  std::optional<std::vector<UtilityVector>> utilities;

  // Throws a parse error when the file has no preferences.
  Game game() const;
};

// Throws Error(kParse) with "line L, column C: ..." diagnostics.
GameFile parse_game_file(const std::string& text);

std::string serialize_game_file(const GameFile& file);
std::string serialize_game(const Game& game);

GameFile load_game_file(const std::string& path);

}  // namespace itervote::cli

#endif  // ITERVOTE_CLI_GAMEFILE_HPP_
