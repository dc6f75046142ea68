#include "grt/lie_text.hpp"

#include <cctype>
#include <limits>

namespace grt {

namespace {

constexpr int kNoDegree = std::numeric_limits<int>::max();

struct Parsed {
  LieSeries value;
  int low;  // syntactic lowest degree; kNoDegree for a literal zero
};

class Parser {
 public:
  Parser(std::string_view text, const FreeLiePtr& algebra, const ParseOptions& options)
      : text_(text), algebra_(algebra), options_(options) {}

  LieSeries run() {
    Parsed p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return std::move(p.value);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Parsed expr() {
    int sign = 1;
    if (peek('-')) {
      sign = -1;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    Parsed acc = term();
    if (sign < 0) acc.value *= Rational(-1);
    while (true) {
      if (peek('+')) {
        ++pos_;
        Parsed t = term();
        acc.value += t.value;
        acc.low = std::min(acc.low, t.low);
      } else if (peek('-')) {
        ++pos_;
        Parsed t = term();
        acc.value -= t.value;
        acc.low = std::min(acc.low, t.low);
      } else {
        return acc;
      }
    }
  }

  Parsed term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      Rational c = rational();
      if (peek('*')) ++pos_;
      skip_ws();
      if (pos_ < text_.size() && starts_atom(text_[pos_])) {
        Parsed a = atom();
        a.value *= c;
        return a;
      }
      if (c != 0) throw ParseError("nonzero scalar term has no degree", start);
      return {LieSeries(algebra_), kNoDegree};
    }
    return atom();
  }

  static bool starts_atom(char c) {
    return c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num(text_.substr(start, pos_ - start));
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      std::string den(text_.substr(dstart, pos_ - dstart));
      if (mpz_class(den, 10) == 0) throw ParseError("zero denominator", dstart);
      return parse_rational(num + "/" + den);
    }
    pos_ = save;
    return parse_rational(num);
  }

  Parsed atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Parsed inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      const std::size_t open = pos_;
      ++pos_;
      Parsed a = expr();
      expect(',');
      Parsed b = expr();
      expect(']');
      if (a.low != kNoDegree && b.low != kNoDegree &&
          a.low + b.low > algebra_->max_degree())
        throw ParseError("degree overflow: bracket of degree " + std::to_string(a.low + b.low) +
                             " exceeds max_degree " + std::to_string(algebra_->max_degree()),
                         open);
      int low = (a.low == kNoDegree || b.low == kNoDegree) ? kNoDegree : a.low + b.low;
      return {bracket(a.value, b.value), low};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (options_.canonicalize) name = options_.canonicalize(name);
      auto letter = algebra_->letter_of(name);
      if (!letter) throw ParseError("unknown generator '" + name + "'", start);
      return {LieSeries::generator(algebra_, *letter), 1};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const FreeLiePtr& algebra_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

LieSeries parse_lie(std::string_view text, const FreeLiePtr& algebra,
                    const ParseOptions& options) {
  return Parser(text, algebra, options).run();
}

std::string bracketed(const FreeLie& algebra, const Word& w) {
  if (w.size() == 1) return algebra.alphabet().at(w[0]);
  const std::size_t k = standard_split(w);
  Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  return "[" + bracketed(algebra, left) + "," + bracketed(algebra, right) + "]";
}

std::string format_lie(const LieSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += bracketed(s.algebra(), w);
    first = false;
  }
  return out;
}

nlohmann::json to_json(const LieSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : s.terms())
    terms.push_back({{"word", s.algebra().word_string(w)}, {"coeff", to_string(c)}});
  return {{"alphabet", s.algebra().alphabet()},
          {"max_degree", s.max_degree()},
          {"terms", std::move(terms)}};
}

LieSeries lie_from_json(const nlohmann::json& j) {
  auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
  auto algebra = FreeLie::create(alphabet, j.at("max_degree").get<int>());
  Terms terms;
  for (const auto& t : j.at("terms")) {
    const auto text = t.at("word").get<std::string>();
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t best_len = 0;
      Letter best = 0;
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        const auto& name = alphabet[i];
        if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
          best_len = name.size();
          best = static_cast<Letter>(i);
        }
      }
      if (best_len == 0) throw std::invalid_argument("lie_from_json: cannot split word '" + text + "'");
      w.push_back(best);
      pos += best_len;
    }
    if (!is_lyndon(w)) throw std::invalid_argument("lie_from_json: '" + text + "' is not a Lyndon word");
    if (static_cast<int>(w.size()) > algebra->max_degree())
      throw std::invalid_argument("lie_from_json: word '" + text + "' exceeds max_degree");
    Rational c = parse_rational(t.at("coeff").get<std::string>());
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
  return LieSeries(algebra, std::move(terms));
}

}  // namespace grt
