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

#include "itervote_cli/gamefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "itervote/error.hpp"

namespace itervote::cli {
namespace {

struct Token {
  std::string text;
  int column = 0;
};

bool is_punct(char c) {
  return c == '=' || c == '>' || c == ',' || c == '{' || c == '}' || c == '*';
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    if (line.compare(i, 2, "->") == 0) {
      out.push_back({"->", col});
      i += 2;
    } else if (is_punct(c)) {
      out.push_back({std::string(1, c), col});
      ++i;
    } else {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             !is_punct(line[j]) && line[j] != '#' && line.compare(j, 2, "->") != 0) {
        ++j;
      }
      out.push_back({line.substr(i, j - i), col});
      i = j;
    }
  }
  return out;
}

[[noreturn]] void parse_error(int line, int column, const std::string& what) {
  fail(ErrorKind::kParse,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

class Cursor {
 public:
  Cursor(std::vector<Token> tokens, int line, int end_column)
      : tokens_(std::move(tokens)), line_(line), end_column_(end_column) {}

  bool done() const { return pos_ == tokens_.size(); }
  const Token& peek() const {
    if (done()) parse_error(line_, end_column_, "unexpected end of line");
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& text) {
    const Token t = next();
    if (t.text != text) parse_error(line_, t.column, "expected '" + text + "', got '" + t.text + "'");
  }
  std::string word() {
    const Token t = next();
    if (t.text.size() == 1 && is_punct(t.text[0])) {
      parse_error(line_, t.column, "expected a name, got '" + t.text + "'");
    }
    return t.text;
  }
  void finish() {
    if (!done()) parse_error(line_, tokens_[pos_].column, "unexpected '" + tokens_[pos_].text + "'");
  }
  [[noreturn]] void error_at_last(const std::string& what) const {
    const int col = pos_ == 0 ? 1 : tokens_[pos_ - 1].column;
    parse_error(line_, col, what);
  }
  int line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
  int end_column_;
};

long long parse_int(Cursor& cur) {
  const std::string w = cur.word();
  long long v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) cur.error_at_last("expected an integer, got '" + w + "'");
  return v;
}

double parse_real(Cursor& cur) {
  const std::string w = cur.word();
  double v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) cur.error_at_last("expected a number, got '" + w + "'");
  return v;
}

std::string format_real(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

struct VoterLine {
  int line = 0;
  std::optional<int> weight;
  std::optional<std::vector<std::string>> actions;  // empty optional: '*'
  bool has_actions = false;
  std::optional<std::vector<std::string>> prefs;
  int prefs_column = 0;
};

}  // namespace

Game GameFile::game() const {
  if (!prefs) fail(ErrorKind::kParse, "the game file has no voter preferences");
  Game g{form, *prefs, utilities};
  g.validate();
  return g;
}

GameFile parse_game_file(const std::string& text) {
  std::vector<std::string> names;
  std::optional<TieBreak> tiebreak;
  std::optional<std::vector<long long>> initial;
  int initial_line = 0;
  std::vector<VoterLine> voters;
  std::vector<std::vector<double>> utilities;
  int utilities_line = 0;
  bool tabular = false;
  std::map<int, std::vector<std::string>> action_lines;
  std::vector<std::pair<int, std::pair<std::vector<std::string>, std::vector<std::string>>>> maps;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    Cursor cur(std::move(tokens), line_no, static_cast<int>(raw.size()) + 1);
    const Token head = cur.next();
    const std::string& d = head.text;
    if (d == "candidates") {
      if (!names.empty()) parse_error(line_no, head.column, "candidates given twice");
      cur.expect("=");
      while (!cur.done()) {
        std::string w = cur.word();
        if (std::find(names.begin(), names.end(), w) != names.end()) {
          cur.error_at_last("duplicate candidate '" + w + "'");
        }
        names.push_back(std::move(w));
      }
      if (names.empty()) parse_error(line_no, head.column, "no candidates");
    } else if (d == "tiebreak") {
      cur.expect("=");
      const std::string w = cur.word();
      if (w == "lex") tiebreak = TieBreak::kLexicographic;
      else if (w == "random") tiebreak = TieBreak::kRandomized;
      else cur.error_at_last("tiebreak must be lex or random");
      cur.finish();
    } else if (d == "initial_scores") {
      cur.expect("=");
      initial_line = line_no;
      initial.emplace();
      while (!cur.done()) {
        const long long v = parse_int(cur);
        if (v < 0) cur.error_at_last("initial scores must be non-negative");
        initial->push_back(v);
      }
    } else if (d == "voter") {
      VoterLine v;
      v.line = line_no;
      while (!cur.done()) {
        const Token key = cur.next();
        if (key.text == "w") {
          cur.expect("=");
          const long long w = parse_int(cur);
          if (w <= 0) cur.error_at_last("weights must be positive");
          v.weight = static_cast<int>(w);
        } else if (key.text == "actions") {
          cur.expect("=");
          v.has_actions = true;
          if (cur.peek().text == "*") {
            cur.next();
          } else {
            v.actions.emplace();
            v.actions->push_back(cur.word());
            while (!cur.done() && cur.peek().text == ",") {
              cur.next();
              v.actions->push_back(cur.word());
            }
          }
        } else if (key.text == "prefs") {
          cur.expect("=");
          v.prefs_column = cur.peek().column;
          v.prefs.emplace();
          v.prefs->push_back(cur.word());
          while (!cur.done()) {
            cur.expect(">");
            v.prefs->push_back(cur.word());
          }
        } else {
          parse_error(line_no, key.column, "unknown voter attribute '" + key.text + "'");
        }
      }
      voters.push_back(std::move(v));
    } else if (d == "utilities") {
      cur.expect("=");
      if (utilities.empty()) utilities_line = line_no;
      std::vector<double> u;
      while (!cur.done()) u.push_back(parse_real(cur));
      utilities.push_back(std::move(u));
    } else if (d == "form") {
      const std::string w = cur.word();
      if (w != "tabular") cur.error_at_last("unknown form kind '" + w + "'");
      cur.finish();
      tabular = true;
    } else if (d == "actions") {
      if (!tabular) parse_error(line_no, head.column, "'actions' needs 'form tabular' first");
      const long long i = parse_int(cur);
      if (i < 1 || action_lines.count(static_cast<int>(i))) cur.error_at_last("bad or repeated voter index");
      cur.expect("=");
      std::vector<std::string> labels;
      while (!cur.done()) {
        std::string w = cur.word();
        if (std::find(labels.begin(), labels.end(), w) != labels.end()) {
          cur.error_at_last("duplicate action '" + w + "'");
        }
        labels.push_back(std::move(w));
      }
      if (labels.empty()) parse_error(line_no, head.column, "empty action set");
      action_lines[static_cast<int>(i)] = std::move(labels);
    } else if (d == "map") {
      if (!tabular) parse_error(line_no, head.column, "'map' needs 'form tabular' first");
      std::vector<std::string> labels;
      while (cur.peek().text != "->") labels.push_back(cur.word());
      cur.expect("->");
      std::vector<std::string> winners;
      if (cur.peek().text == "{") {
        cur.next();
        winners.push_back(cur.word());
        while (cur.peek().text == ",") {
          cur.next();
          winners.push_back(cur.word());
        }
        cur.expect("}");
      } else {
        winners.push_back(cur.word());
      }
      cur.finish();
      maps.push_back({line_no, {std::move(labels), std::move(winners)}});
    } else {
      parse_error(line_no, head.column, "unknown directive '" + d + "'");
    }
  }

  if (names.empty()) parse_error(line_no + 1, 1, "missing 'candidates' directive");
  const int m = static_cast<int>(names.size());
  auto candidate = [&](const std::string& w, int line) {
    auto it = std::find(names.begin(), names.end(), w);
    if (it == names.end()) parse_error(line, 1, "unknown candidate '" + w + "'");
    return CandidateId{static_cast<int>(it - names.begin())};
  };

  GameFile file;
  int n = 0;
  if (tabular) {
    if (tiebreak || initial) parse_error(initial ? initial_line : 1, 1,
                                         "tabular forms take no tiebreak or initial scores");
    n = static_cast<int>(action_lines.size());
    if (n == 0) parse_error(line_no + 1, 1, "tabular form without action sets");
    if (action_lines.rbegin()->first != n) parse_error(line_no + 1, 1, "action sets must be numbered 1..n");
    std::vector<std::vector<std::string>> labels;
    std::vector<int> radices;
    std::uint64_t states = 1;
    for (auto& [i, l] : action_lines) {
      radices.push_back(static_cast<int>(l.size()));
      states *= l.size();
      labels.push_back(l);
    }
    std::vector<Outcome> table(states);
    std::vector<bool> seen(states, false);
    for (const auto& [line, entry] : maps) {
      const auto& [profile_labels, winners] = entry;
      if (static_cast<int>(profile_labels.size()) != n) {
        parse_error(line, 1, "map needs one action per voter");
      }
      std::uint64_t index = 0;
      for (int i = 0; i < n; ++i) {
        auto it = std::find(labels[i].begin(), labels[i].end(), profile_labels[i]);
        if (it == labels[i].end()) {
          parse_error(line, 1, "'" + profile_labels[i] + "' is not an action of voter " +
                                   std::to_string(i + 1));
        }
        index = index * radices[i] + static_cast<std::uint64_t>(it - labels[i].begin());
      }
      if (seen[index]) parse_error(line, 1, "profile mapped twice");
      seen[index] = true;
      Outcome o;
      for (const std::string& w : winners) o.insert(candidate(w, line));
      table[index] = o;
    }
    const auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing != seen.end()) {
      std::uint64_t index = static_cast<std::uint64_t>(missing - seen.begin());
      std::vector<std::string> parts(n);
      for (int i = n - 1; i >= 0; --i) {
        parts[i] = labels[i][index % radices[i]];
        index /= radices[i];
      }
      std::string p;
      for (const auto& s : parts) p += (p.empty() ? "" : ",") + s;
      parse_error(line_no + 1, 1, "tabular map is not total: (" + p + ") is missing");
    }
    for (const VoterLine& v : voters) {
      if (v.weight || v.has_actions) {
        parse_error(v.line, 1, "voters of a tabular form take only prefs");
      }
    }
    file.form = GameForm::tabular(names, std::move(labels), std::move(table));
  } else {
    if (!maps.empty()) parse_error(maps.front().first, 1, "'map' needs 'form tabular'");
    n = static_cast<int>(voters.size());
    PluralitySpec spec;
    spec.num_candidates = m;
    spec.tiebreak = tiebreak.value_or(TieBreak::kLexicographic);
    if (initial && static_cast<int>(initial->size()) != m) {
      parse_error(initial_line, 1, "initial_scores needs one value per candidate");
    }
    spec.initial_scores = initial.value_or(std::vector<long long>(m, 0));
    bool restricted = false;
    for (const VoterLine& v : voters) {
      spec.weights.push_back(v.weight.value_or(1));
      std::vector<CandidateId> set;
      if (v.actions) {
        for (const std::string& w : *v.actions) {
          const CandidateId c = candidate(w, v.line);
          if (std::find(set.begin(), set.end(), c) != set.end()) {
            parse_error(v.line, 1, "duplicate action '" + w + "'");
          }
          set.push_back(c);
        }
        restricted = true;
      }
      spec.action_sets.push_back(std::move(set));
    }
    if (!restricted) spec.action_sets.clear();
    file.form = GameForm::plurality(std::move(spec), names);
  }

  const auto with_prefs = std::count_if(voters.begin(), voters.end(),
                                        [](const VoterLine& v) { return v.prefs.has_value(); });
  if (with_prefs > 0) {
    if (with_prefs != static_cast<long>(voters.size()) || static_cast<int>(voters.size()) != n) {
      parse_error(voters.front().line, 1, "every voter needs a prefs list");
    }
    std::vector<PreferenceOrder> prefs;
    for (const VoterLine& v : voters) {
      std::vector<CandidateId> ranking;
      std::set<int> used;
      for (const std::string& w : *v.prefs) {
        const CandidateId c = candidate(w, v.line);
        if (!used.insert(c.index).second) {
          parse_error(v.line, v.prefs_column, "prefs repeat candidate '" + w + "'");
        }
        ranking.push_back(c);
      }
      if (static_cast<int>(ranking.size()) != m) {
        parse_error(v.line, v.prefs_column, "prefs must rank all " + std::to_string(m) + " candidates");
      }
      prefs.emplace_back(std::move(ranking));
    }
    file.prefs = std::move(prefs);
  }
  if (!utilities.empty()) {
    if (static_cast<int>(utilities.size()) != n) {
      parse_error(utilities_line, 1, "expected " + std::to_string(n) + " utilities lines, got " +
                                         std::to_string(utilities.size()));
    }
    if (!file.prefs) parse_error(utilities_line, 1, "utilities need voter prefs");
    std::vector<UtilityVector> us;
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(utilities[i].size()) != m) {
        parse_error(utilities_line + i, 1, "utilities need one value per candidate");
      }
      us.emplace_back(utilities[i]);
      if (!us.back().consistent_with((*file.prefs)[i])) {
        parse_error(utilities_line + i, 1, "utilities of voter " + std::to_string(i + 1) +
                                               " are inconsistent with their prefs");
      }
    }
    file.utilities = std::move(us);
  }
  return file;
}

std::string serialize_game_file(const GameFile& file) {
  const GameForm& form = file.form;
  std::ostringstream os;
  os << "candidates =";
  for (const std::string& name : form.candidate_names()) os << ' ' << name;
  os << '\n';
  auto prefs_of = [&](int i) {
    std::string s = "prefs =";
    bool first = true;
    for (CandidateId c : (*file.prefs)[i].ranking()) {
      s += (first ? " " : " > ") + form.candidate_name(c);
      first = false;
    }
    return s;
  };
  if (form.is_plurality()) {
    const PluralitySpec& spec = form.plurality_spec();
    os << "tiebreak = " << (spec.tiebreak == TieBreak::kLexicographic ? "lex" : "random") << '\n';
    os << "initial_scores =";
    for (long long s : spec.initial_scores) os << ' ' << s;
    os << '\n';
    for (int i = 0; i < spec.num_voters(); ++i) {
      os << "voter w=" << spec.weights[i] << " actions=";
      if (spec.action_sets.empty() || spec.action_sets[i].empty()) {
        os << '*';
      } else {
        for (std::size_t a = 0; a < spec.action_sets[i].size(); ++a) {
          os << (a ? "," : "") << form.candidate_name(spec.action_sets[i][a]);
        }
      }
      if (file.prefs) os << ' ' << prefs_of(i);
      os << '\n';
    }
  } else {
    os << "form tabular\n";
    for (int i = 0; i < form.num_voters(); ++i) {
      os << "actions " << i + 1 << " =";
      for (int a = 0; a < form.num_actions(i); ++a) os << ' ' << form.action_label(i, a);
      os << '\n';
    }
    for (std::uint64_t s = 0; s < form.state_count(); ++s) {
      const Profile p = form.decode(s);
      os << "map";
      for (int i = 0; i < form.num_voters(); ++i) os << ' ' << form.action_label(i, p[i]);
      const Outcome o = form.tabular_form().table[s];
      os << " -> ";
      if (o.size() == 1) {
        os << form.candidate_name(o.first());
      } else {
        os << form.format_outcome(o);
      }
      os << '\n';
    }
    if (file.prefs) {
      for (int i = 0; i < form.num_voters(); ++i) os << "voter " << prefs_of(i) << '\n';
    }
  }
  if (file.utilities) {
    for (const UtilityVector& u : *file.utilities) {
      os << "utilities =";
      for (double v : u.values()) os << ' ' << format_real(v);
      os << '\n';
    }
  }
  return os.str();
}

std::string serialize_game(const Game& game) {
  return serialize_game_file(GameFile{game.form, game.prefs, game.utilities});
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kInvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_game_file(ss.str());
}

}  // namespace itervote::cli
