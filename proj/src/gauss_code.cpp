#include "knots/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Pass parse_token(std::string_view tok) {
  auto fail = [&] { return SyntaxError("malformed pass token '" + std::string(tok) + "'"); };
  if (tok.size() < 3) throw fail();
  Pass p;
  if (tok.front() == 'O') {
    p.role = Role::Over;
  } else if (tok.front() == 'U') {
    p.role = Role::Under;
  } else {
    throw fail();
  }
  if (tok.back() == '+') {
    p.sign = 1;
  } else if (tok.back() == '-') {
    p.sign = -1;
  } else {
    throw fail();
  }
  auto digits = tok.substr(1, tok.size() - 2);
  if (digits.front() == '0') throw fail();
  long long id = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
    id = id * 10 + (ch - '0');
    if (id > 1'000'000'000) throw fail();
  }
  p.crossing = static_cast<CrossingId>(id);
  return p;
}

std::vector<Pass> parse_component(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw SyntaxError("empty component must be written '()'");
  if (text == "()") return {};
  std::vector<Pass> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(parse_token(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

}  // namespace

int GaussCode::crossing_count() const {
  std::size_t passes = 0;
  for (const auto& c : components) passes += c.size();
  return static_cast<int>(passes / 2);
}

GaussCode parse_gauss(std::string_view text) {
  GaussCode code;
  if (trim(text).empty()) throw SyntaxError("empty input");
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(';', start);
    auto part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    code.components.push_back(parse_component(part));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  validate(code);
  return code;
}

std::string to_string(const Pass& pass) {
  std::string s;
  s += pass.role == Role::Over ? 'O' : 'U';
  s += std::to_string(pass.crossing);
  s += pass.sign > 0 ? '+' : '-';
  return s;
}

std::string to_string(const GaussCode& code) {
  std::ostringstream os;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c > 0) os << " ; ";
    const auto& comp = code.components[c];
    if (comp.empty()) {
      os << "()";
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i > 0) os << ' ';
      os << to_string(comp[i]);
    }
  }
  return os.str();
}

void validate(const GaussCode& code) {
  if (code.components.empty()) throw ConsistencyError("a diagram needs at least one component");
  struct Seen {
    int over = 0;
    int under = 0;
    int sign = 0;
  };
  std::map<CrossingId, Seen> seen;
  for (const auto& comp : code.components) {
    for (const auto& p : comp) {
      if (p.crossing <= 0) throw ConsistencyError("crossing ids must be positive");
      if (p.sign != 1 && p.sign != -1) throw ConsistencyError("crossing sign must be +1 or -1");
      auto& s = seen[p.crossing];
      (p.role == Role::Over ? s.over : s.under)++;
      if (s.sign != 0 && s.sign != p.sign)
        throw ConsistencyError("crossing " + std::to_string(p.crossing) + " has mismatched signs");
      s.sign = p.sign;
    }
  }
  for (const auto& [id, s] : seen) {
    if (s.over + s.under != 2)
      throw ConsistencyError("crossing " + std::to_string(id) + " occurs " + std::to_string(s.over + s.under) +
                             " times");
    if (s.over != 1)
      throw ConsistencyError("crossing " + std::to_string(id) + " needs one Over and one Under pass");
  }
}

namespace {

GaussCode relabel(const GaussCode& code, const std::map<CrossingId, CrossingId>& to) {
  GaussCode out = code;
  for (auto& comp : out.components)
    for (auto& p : comp) p.crossing = to.at(p.crossing);
  return out;
}

}  // namespace

GaussCode relabel_by_rank(const GaussCode& code) {
  std::map<CrossingId, CrossingId> to;
  for (const auto& comp : code.components)
    for (const auto& p : comp) to.emplace(p.crossing, 0);
  CrossingId next = 1;
  for (auto& [id, v] : to) v = next++;
  return relabel(code, to);
}

GaussCode canonical(const GaussCode& code) {
  std::map<CrossingId, CrossingId> to;
  CrossingId next = 1;
  for (const auto& comp : code.components)
    for (const auto& p : comp)
      if (to.emplace(p.crossing, next).second) ++next;
  return relabel(code, to);
}

}  // namespace knots
