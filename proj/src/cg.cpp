#include "zipmorph/cg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

namespace zipmorph::cg {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 5> kTagAliases{{
    {"lukusana", "num"},
    {"nimisana", "noun"},
    {"teonsana", "verb"},
    {"laatusana", "adj"},
    {"seikkasana", "adv"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    parts.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

// Splits on whitespace and makes each parenthesis its own token.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::exchange(current, {}));
  };
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else if (c == '(' || c == ')') {
      flush();
      tokens.emplace_back(1, c);
    } else {
      current += c;
    }
  }
  flush();
  return tokens;
}

Predicate parse_predicate(const std::string& token) {
  Predicate p{Predicate::Field::Pos, {}};
  std::string_view body = token;
  if (const auto eq = body.find('='); eq != std::string_view::npos) {
    const std::string_view key = body.substr(0, eq);
    if (key == "POS") {
      p.field = Predicate::Field::Pos;
    } else if (key == "BASEFORM") {
      p.field = Predicate::Field::Baseform;
    } else {
      throw CgError("unknown predicate keyword '" + std::string(key) + "'");
    }
    body = body.substr(eq + 1);
  }
  for (std::string_view value : split(body, '|')) {
    if (value.empty()) throw CgError("empty value in predicate '" + token + "'");
    p.values.emplace_back(p.field == Predicate::Field::Pos ? canonical_tag(value) : value);
  }
  return p;
}

int parse_offset(const std::string& token) {
  std::string_view digits = token;
  const bool explicit_sign = !digits.empty() && (digits.front() == '+' || digits.front() == '-');
  const bool negative = explicit_sign && digits.front() == '-';
  if (explicit_sign) digits.remove_prefix(1);
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
    throw CgError("expected a signed offset, got '" + token + "'");
  }
  return negative ? -value : value;
}

std::string join_values(const std::vector<std::string>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i];
  }
  return out;
}

Reading parse_reading(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw CgError("malformed reading '" + std::string(text) + "' (expected pos:baseform[:features])");
  }
  Reading r{std::string(trim(parts[1])), std::string(trim(parts[0])), {}};
  if (r.pos.empty() || r.baseform.empty()) {
    throw CgError("reading '" + std::string(text) + "' has an empty pos or baseform");
  }
  if (parts.size() == 3) {
    for (std::string_view f : split(parts[2], ',')) {
      f = trim(f);
      if (f.empty()) throw CgError("empty feature in reading '" + std::string(text) + "'");
      r.features.emplace(f);
    }
  }
  return r;
}

}  // namespace

std::string to_string(const Reading& r) {
  std::string out = r.pos + ":" + r.baseform;
  if (!r.features.empty()) {
    out += ':';
    out += join_values(std::vector<std::string>(r.features.begin(), r.features.end()), ',');
  }
  return out;
}

ReadingSet::ReadingSet(std::string surface, std::vector<Reading> readings) : surface_(std::move(surface)) {
  for (Reading& r : readings) {
    if (std::find(readings_.begin(), readings_.end(), r) == readings_.end()) {
      readings_.push_back(std::move(r));
    }
  }
  if (readings_.empty()) {
    throw CgError("token '" + surface_ + "' has no readings");
  }
}

std::string describe(const ReadingSet& rs) {
  std::string out = "{";
  for (std::size_t i = 0; i < rs.readings().size(); ++i) {
    if (i > 0) out += ", ";
    out += rs.readings()[i].pos + "/" + rs.readings()[i].baseform;
  }
  return out + "}";
}

std::string_view canonical_tag(std::string_view tag) {
  for (const auto& [alias, canonical] : kTagAliases) {
    if (alias == tag) return canonical;
  }
  return tag;
}

bool Predicate::matches(const Reading& r) const {
  const std::string& field_value = field == Field::Pos ? r.pos : r.baseform;
  return std::find(values.begin(), values.end(), field_value) != values.end();
}

std::string Predicate::to_string() const {
  return (field == Field::Pos ? "POS=" : "BASEFORM=") + join_values(values, '|');
}

std::string Rule::to_string() const {
  std::string out = action == Action::Select ? "SELECT " : "REMOVE ";
  out += target.to_string();
  if (condition) {
    out += " IF (";
    if (condition->negated) out += "NOT ";
    out += (condition->offset >= 0 ? "+" : "") + std::to_string(condition->offset);
    out += ' ';
    out += condition->test.to_string();
    out += ')';
  }
  return out;
}

Rule parse_rule(std::string_view line) {
  const std::vector<std::string> tokens = tokenize(line);
  std::size_t at = 0;
  auto next = [&](std::string_view what) -> const std::string& {
    if (at >= tokens.size()) throw CgError("unexpected end of rule, expected " + std::string(what));
    return tokens[at++];
  };

  Rule rule{Action::Select, {}, std::nullopt};
  const std::string& action = next("SELECT or REMOVE");
  if (action == "SELECT") {
    rule.action = Action::Select;
  } else if (action == "REMOVE") {
    rule.action = Action::Remove;
  } else {
    throw CgError("unknown action '" + action + "'");
  }
  rule.target = parse_predicate(next("a target"));

  if (at == tokens.size()) return rule;
  if (tokens[at] != "IF") throw CgError("expected IF, got '" + tokens[at] + "'");
  ++at;
  if (next("'('") != "(") throw CgError("expected '(' after IF");

  Condition cond;
  std::string token = next("an offset");
  if (token == "NOT") {
    cond.negated = true;
    token = next("an offset");
  }
  cond.offset = parse_offset(token);
  cond.test = parse_predicate(next("a test"));
  if (next("')'") != ")") throw CgError("expected ')' to close the condition");
  if (at != tokens.size()) throw CgError("trailing input '" + tokens[at] + "'");
  rule.condition = std::move(cond);
  return rule;
}

std::vector<Rule> parse_rules(std::string_view text) {
  std::vector<Rule> rules;
  std::size_t line_number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      rules.push_back(parse_rule(line));
    } catch (const ParseError&) {
      throw;
    } catch (const CgError& e) {
      throw ParseError(line_number, e.what());
    }
  }
  return rules;
}

bool eval_condition(const SentenceZipper& z, const Condition& condition) {
  const ReadingSet* at = z.at_offset(condition.offset);
  bool holds = false;
  if (at != nullptr) {
    holds = std::any_of(at->readings().begin(), at->readings().end(),
                        [&](const Reading& r) { return condition.test.matches(r); });
  }
  return condition.negated ? !holds : holds;
}

ReadingSet apply_rule(const SentenceZipper& z, const Rule& rule) {
  const ReadingSet& focus = z.extract();
  if (rule.condition && !eval_condition(z, *rule.condition)) return focus;

  std::vector<Reading> kept;
  for (const Reading& r : focus.readings()) {
    const bool hit = rule.target.matches(r);
    if (hit == (rule.action == Action::Select)) kept.push_back(r);
  }
  if (kept.empty() || kept.size() == focus.size()) return focus;
  return ReadingSet(focus.surface(), std::move(kept));
}

CgArrow rule_arrow(Rule rule) {
  return [rule = std::move(rule)](const SentenceZipper& z) { return apply_rule(z, rule); };
}

CgArrow compose(CgArrow f, CgArrow g) {
  return [f = std::move(f), g = std::move(g)](const SentenceZipper& z) { return g(z.extend(f)); };
}

Sentence run_cg(const Sentence& sentence, const std::vector<Rule>& rules, const FiringSink& sink) {
  if (sentence.empty()) throw CgError("run_cg: empty sentence");
  SentenceZipper z = SentenceZipper::from_sequence(sentence, 0);
  for (std::size_t n = 0; n < rules.size(); ++n) {
    const Rule& rule = rules[n];
    SentenceZipper next = z.extend([&](const SentenceZipper& at) { return apply_rule(at, rule); });
    if (sink) {
      const auto before = z.to_sequence();
      const auto after = next.to_sequence();
      for (std::size_t i = 0; i < before.size(); ++i) {
        if (!(before[i] == after[i])) sink(Firing{n + 1, i + 1, before[i], after[i]});
      }
    }
    z = std::move(next);
  }
  return z.to_sequence();
}

std::string format_firing(const Firing& f) {
  return "rule " + std::to_string(f.rule_number) + " fired at token " + std::to_string(f.token_number) +
         ": " + describe(f.before) + " → " + describe(f.after);
}

std::vector<Sentence> parse_readings(std::string_view text) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::size_t line_number = 0;
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::string_view raw : lines) {
    ++line_number;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      if (!current.empty()) sentences.push_back(std::exchange(current, {}));
      continue;
    }
    const auto tab = raw.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(line_number, "expected surface<TAB>readings");
    }
    const std::string surface(trim(raw.substr(0, tab)));
    if (surface.empty()) throw ParseError(line_number, "empty surface form");
    const std::string_view list = trim(raw.substr(tab + 1));
    if (list.empty()) throw ParseError(line_number, "token '" + surface + "' has no readings");
    std::vector<Reading> readings;
    try {
      for (std::string_view item : split(list, ';')) readings.push_back(parse_reading(trim(item)));
      current.emplace_back(surface, std::move(readings));
    } catch (const CgError& e) {
      throw ParseError(line_number, e.what());
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::string format_readings(const std::vector<Sentence>& sentences) {
  std::string out;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (s > 0) out += '\n';
    for (const ReadingSet& rs : sentences[s]) {
      out += rs.surface();
      out += '\t';
      for (std::size_t i = 0; i < rs.readings().size(); ++i) {
        if (i > 0) out += ';';
        out += to_string(rs.readings()[i]);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace zipmorph::cg
