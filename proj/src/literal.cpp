#include "tri/literal.hpp"

#include <cctype>
#include <map>
#include <set>

#include "tri/error.hpp"

namespace tri {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'' || c == '-' || c == '.';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool peek_name() {
    skip_space();
    return pos_ < text_.size() && is_name_char(text_[pos_]);
  }
  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) error("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::SyntaxError, "poset literal, offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

using Covers = std::vector<std::pair<std::string, std::string>>;

// a<b<c adds a<b and b<c.
void read_cover_chain(Cursor& in, Covers& covers) {
  std::string lo = in.name();
  if (!in.accept('<')) in.error("expected '<' in a cover");
  do {
    std::string hi = in.name();
    covers.emplace_back(lo, hi);
    lo = std::move(hi);
  } while (in.accept('<'));
}

std::size_t parse_count(std::string_view digits) {
  if (digits.empty() || digits.size() > 3) fail(ErrorKind::SyntaxError, "bad size in poset literal");
  std::size_t n = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorKind::SyntaxError, "bad size in poset literal");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

}  // namespace

FinPoset parse_poset(std::string_view text) {
  text = trim(text);
  if (text.starts_with("chain:")) return FinPoset::chain(parse_count(text.substr(6)));
  if (text.starts_with("antichain:")) return FinPoset::antichain(parse_count(text.substr(10)));

  Cursor in(text);
  std::vector<std::string> elems;
  Covers covers;
  std::string label;
  if (in.accept('{')) {
    if (!in.accept('}')) {
      if (!in.accept('|')) {
        do elems.push_back(in.name());
        while (in.accept(','));
        if (in.accept('|')) {
          do read_cover_chain(in, covers);
          while (in.accept(','));
        }
      }
      in.expect('}');
    }
  } else {
    if (in.name() != "poset") in.error("expected 'poset', '{', 'chain:' or 'antichain:'");
    if (in.peek_name()) label = in.name();
    in.expect('{');
    while (!in.accept('}')) {
      const std::string section = in.name();
      if (section == "elems") {
        while (in.peek_name()) elems.push_back(in.name());
      } else if (section == "covers") {
        while (in.peek_name()) read_cover_chain(in, covers);
      } else {
        in.error("unknown section '" + section + "'");
      }
      in.expect(';');
    }
  }
  if (!in.done()) in.error("trailing text");
  if (std::set<std::string>(elems.begin(), elems.end()).size() != elems.size())
    fail(ErrorKind::SyntaxError, "duplicate element in poset literal");
  return make_poset(std::move(elems), covers, std::move(label));
}

nlohmann::json poset_json(const FinPoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back(nlohmann::json::array({p.name(a), p.name(b)}));
  return {{"name", p.label()}, {"elements", p.carrier().elements()}, {"covers", covers}};
}

std::vector<std::pair<std::string, Rat>> parse_weights(std::string_view text) {
  text = trim(text);
  if (const auto eq = text.find('='); eq != std::string_view::npos && eq < text.find('{')) {
    std::string_view head = trim(text.substr(0, eq));
    bool name_only = !head.empty();
    for (char c : head) name_only = name_only && is_name_char(c);
    if (name_only) text = trim(text.substr(eq + 1));
  }
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(ErrorKind::SyntaxError, "weights must be written {key: value, ...}");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::pair<std::string, Rat>> out;
  std::set<std::string> seen;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view entry = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : trim(text.substr(comma + 1));
    const auto colon = entry.rfind(':');
    if (colon == std::string_view::npos) fail(ErrorKind::SyntaxError, "missing ':' in '" + std::string(entry) + "'");
    std::string key(trim(entry.substr(0, colon)));
    if (key.empty()) fail(ErrorKind::SyntaxError, "empty key in weights");
    if (!seen.insert(key).second) fail(ErrorKind::SyntaxError, "duplicate key '" + key + "'");
    out.emplace_back(std::move(key), parse_rat(trim(entry.substr(colon + 1))));
  }
  return out;
}

namespace {

std::vector<Rat> dense_weights(const FinSet& carrier, std::string_view text) {
  std::vector<Rat> values(carrier.size(), Rat(0));
  for (const auto& [key, value] : parse_weights(text)) values[carrier.index_of(key)] = value;
  return values;
}

}  // namespace

Distribution parse_distribution(const FinSet& carrier, std::string_view text) {
  return Distribution(carrier, dense_weights(carrier, text));
}

FuzzyPredicate parse_predicate(const FinSet& carrier, std::string_view text) {
  return FuzzyPredicate(carrier, dense_weights(carrier, text));
}

}  // namespace tri
