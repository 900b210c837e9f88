#include "elimkit/multipoly.hpp"

#include <cctype>

#include "elimkit/parse.hpp"
#include "json.hpp"

namespace elimkit {

std::string default_var_name(int slot) {
  switch (slot) {
    case kX1: return "X1";
    case kX2: return "X2";
    case kX3: return "X3";
    case kX4: return "X4";
    case kXParam: return "x";
    case kT: return "t";
    default: return "V" + std::to_string(slot);
  }
}

std::string corollary_var_name(int slot) {
  switch (slot) {
    case kX2: return "y";
    case kX3: return "z";
    case kX4: return "zp";
    default: return default_var_name(slot);
  }
}

std::optional<int> var_slot(const std::string& name) {
  static const std::pair<const char*, int> names[] = {{"X1", kX1}, {"X2", kX2}, {"X3", kX3}, {"X4", kX4}, {"x", kXParam},
                                                      {"t", kT},   {"y", kX2},  {"z", kX3},  {"zp", kX4}, {"z'", kX4}};
  for (auto [n, s] : names)
    if (name == n) return s;
  return std::nullopt;
}

MultiPoly<UniPoly> lift_parameter(const MultiPoly<BigInt>& p, int slot) {
  std::vector<MultiPoly<UniPoly>::Term> out;
  for (const auto& t : p.terms()) {
    Monomial m = t.m;
    int k = m.e[slot];
    m.e[slot] = 0;
    out.push_back({m, UniPoly::monomial(t.c, k)});
  }
  return MultiPoly<UniPoly>::from_terms(std::move(out));
}

MultiPoly<BigInt> eval_parameter(const MultiPoly<UniPoly>& p, const BigInt& x) {
  return p.map_coeffs([&](const UniPoly& c) { return c.eval(x); });
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ParsedPoly run() {
    ParsedPoly out;
    out.poly = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    out.corollary_names = corollary_;
    return out;
  }

 private:
  using P = MultiPoly<BigInt>;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    acc = neg ? -term() : term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }
  P term() {
    P acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  P power() {
    P base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = mp_pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }
  P atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside products, e.g. 2*-x
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return P(BigInt(s_.substr(start, pos_ - start)));
    }
    if (c == 'X' && pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '4') {
      pos_ += 2;
      return P::var(kX1 + (s_[pos_ - 1] - '1'));
    }
    if (c == 'z' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == 'p' || s_[pos_ + 1] == '\'')) {
      pos_ += 2;
      corollary_ = true;
      return P::var(kX4);
    }
    ++pos_;
    switch (c) {
      case 'x': return P::var(kXParam);
      case 'y': corollary_ = true; return P::var(kX2);
      case 'z': corollary_ = true; return P::var(kX3);
      case 't': return P::var(kT);
      default: --pos_; fail("unknown symbol '" + std::string(1, c) + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  bool corollary_ = false;
};

}  // namespace

ParsedPoly parse_poly(const std::string& text) { return Parser(text).run(); }

namespace {
constexpr int kJsonSlots = kT + 1;
}

std::string mp_to_json(const MultiPoly<BigInt>& p) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> e(t.m.e.begin(), t.m.e.begin() + kJsonSlots);
    out.push_back({{"exps", e}, {"coeff", t.c.str()}});
  }
  return out.dump();
}

MultiPoly<BigInt> mp_from_json(const std::string& text) {
  std::vector<MultiPoly<BigInt>::Term> terms;
  try {
    for (const auto& j : nlohmann::json::parse(text)) {
      Monomial m;
      auto e = j.at("exps").get<std::vector<int>>();
      if (e.size() > kJsonSlots) throw ParseError("too many exponent slots");
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 65535) throw ParseError("exponent out of range");
        m.e[i] = static_cast<std::uint16_t>(e[i]);
      }
      terms.push_back({m, BigInt(j.at("coeff").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ex.what());
  }
  return MultiPoly<BigInt>::from_terms(std::move(terms));
}

}  // namespace elimkit
