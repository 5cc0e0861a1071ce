#include "upd/family_json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "upd/errors.hpp"

namespace upd {

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t col = 1;
};

struct Value {
  enum class Type { Object, Array, String, Number };

  Type type = Type::Object;
  Pos pos;
  std::vector<std::pair<std::string, Value>> members;  // insertion order
  std::vector<Pos> key_pos;
  std::vector<Value> elements;
  std::string str;
  Integer num;

  const char* type_name() const {
    switch (type) {
      case Type::Object: return "object";
      case Type::Array: return "array";
      case Type::String: return "string";
      case Type::Number: return "number";
    }
    return "?";
  }
};

[[noreturn]] void fail(Pos pos, const std::string& message) {
  throw ParseError(pos.line, pos.col, message);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Value parse_document() {
    Value v = parse_value();
    skip_ws();
    if (i_ < text_.size()) fail(pos_, "trailing input after document");
    return v;
  }

 private:
  bool eof() const { return i_ >= text_.size(); }
  char peek() const { return text_[i_]; }

  char take() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        take();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(pos_, std::string("expected '") + c + "'");
    }
    take();
  }

  Value parse_value() {
    skip_ws();
    if (eof()) fail(pos_, "unexpected end of input");
    char c = peek();
    if (c == '{') return parse_object();
    if (c == '[') return parse_array();
    if (c == '"') return parse_string();
    if (c >= '0' && c <= '9') return parse_number();
    if (c == '-') fail(pos_, "negative numbers are not allowed here");
    fail(pos_, std::string("unexpected character '") + c + "'");
  }

  Value parse_object() {
    Value v;
    v.type = Value::Type::Object;
    v.pos = pos_;
    expect('{');
    skip_ws();
    if (!eof() && peek() == '}') {
      take();
      return v;
    }
    for (;;) {
      skip_ws();
      Pos key_at = pos_;
      if (eof() || peek() != '"') fail(pos_, "expected a string key");
      Value key = parse_string();
      for (const auto& [existing, unused] : v.members) {
        (void)unused;
        if (existing == key.str) {
          fail(key_at, "duplicate key \"" + key.str + "\"");
        }
      }
      skip_ws();
      expect(':');
      Value member = parse_value();
      v.members.emplace_back(key.str, std::move(member));
      v.key_pos.push_back(key_at);
      skip_ws();
      if (eof()) fail(pos_, "unterminated object");
      if (peek() == ',') {
        take();
        continue;
      }
      expect('}');
      return v;
    }
  }

  Value parse_array() {
    Value v;
    v.type = Value::Type::Array;
    v.pos = pos_;
    expect('[');
    skip_ws();
    if (!eof() && peek() == ']') {
      take();
      return v;
    }
    for (;;) {
      v.elements.push_back(parse_value());
      skip_ws();
      if (eof()) fail(pos_, "unterminated array");
      if (peek() == ',') {
        take();
        continue;
      }
      expect(']');
      return v;
    }
  }

  Value parse_string() {
    Value v;
    v.type = Value::Type::String;
    v.pos = pos_;
    expect('"');
    for (;;) {
      if (eof()) fail(v.pos, "unterminated string");
      char c = take();
      if (c == '"') return v;
      if (c == '\\') {
        if (eof()) fail(pos_, "unterminated escape");
        char e = take();
        switch (e) {
          case '"': v.str += '"'; break;
          case '\\': v.str += '\\'; break;
          case '/': v.str += '/'; break;
          case 'b': v.str += '\b'; break;
          case 'f': v.str += '\f'; break;
          case 'n': v.str += '\n'; break;
          case 'r': v.str += '\r'; break;
          case 't': v.str += '\t'; break;
          default: fail(pos_, "unsupported escape sequence");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x20) {
        fail(pos_, "control character in string");
      }
      v.str += c;
    }
  }

  Value parse_number() {
    Value v;
    v.type = Value::Type::Number;
    v.pos = pos_;
    std::string digits;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      digits += take();
    }
    if (digits.size() > 1 && digits[0] == '0') {
      fail(v.pos, "numbers may not have leading zeros");
    }
    if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      fail(pos_, "only non-negative integers are allowed");
    }
    v.num = Integer(digits);
    return v;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Pos pos_;
};

const Value& require_type(const Value& v, Value::Type type,
                          const std::string& what) {
  if (v.type != type) {
    fail(v.pos, what + " must be " +
                    (type == Value::Type::Object   ? "an object"
                     : type == Value::Type::Array  ? "an array"
                     : type == Value::Type::String ? "a string"
                                                   : "a number") +
                    ", got " + v.type_name());
  }
  return v;
}

std::vector<std::string> parse_name_list(const Value& v,
                                         const std::string& what) {
  require_type(v, Value::Type::Array, what);
  if (v.elements.empty()) fail(v.pos, what + " must not be empty");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& e : v.elements) {
    require_type(e, Value::Type::String, what + " entries");
    if (e.str.empty()) fail(e.pos, what + " entries must be non-empty");
    if (!seen.insert(e.str).second) {
      fail(e.pos, "duplicate name \"" + e.str + "\"");
    }
    names.push_back(e.str);
  }
  return names;
}

// Maps every key of a generator object onto the var/param lists; -1 marks a
// parameter slot.
struct KeyIndex {
  std::vector<std::string> vars;
  std::vector<std::string> params;

  std::pair<bool, std::size_t> lookup(const std::string& key) const {
    auto v = std::find(vars.begin(), vars.end(), key);
    if (v != vars.end()) {
      return {true, static_cast<std::size_t>(v - vars.begin())};
    }
    auto p = std::find(params.begin(), params.end(), key);
    if (p != params.end()) {
      return {false, static_cast<std::size_t>(p - params.begin())};
    }
    return {true, static_cast<std::size_t>(-1)};
  }
};

GradedGenerator parse_graded_generator(const Value& gen, const KeyIndex& idx) {
  require_type(gen, Value::Type::Object, "a graded generator");
  GradedGenerator g{Monomial::one(idx.vars.size()),
                    std::vector<Integer>(idx.params.size(), Integer(0))};
  for (std::size_t m = 0; m < gen.members.size(); ++m) {
    const auto& [key, value] = gen.members[m];
    auto [is_var, slot] = idx.lookup(key);
    if (slot == static_cast<std::size_t>(-1)) {
      fail(gen.key_pos[m], "unknown key \"" + key + "\"");
    }
    require_type(value, Value::Type::Number, "a graded exponent");
    if (is_var) {
      g.base.exponents[slot] = value.num;
    } else {
      g.thresholds[slot] = value.num;
    }
  }
  return g;
}

std::vector<AffineForm> parse_affine_generator(const Value& gen,
                                               const KeyIndex& idx) {
  require_type(gen, Value::Type::Object, "an affine generator");
  std::vector<AffineForm> forms(
      idx.vars.size(),
      AffineForm{Integer(0), std::vector<Integer>(idx.params.size())});
  for (std::size_t m = 0; m < gen.members.size(); ++m) {
    const auto& [key, value] = gen.members[m];
    auto [is_var, slot] = idx.lookup(key);
    if (!is_var || slot == static_cast<std::size_t>(-1)) {
      fail(gen.key_pos[m],
           "unknown key \"" + key + "\" (affine generators are keyed by vars)");
    }
    AffineForm& form = forms[slot];
    if (value.type == Value::Type::Number) {
      form.constant = value.num;
      continue;
    }
    require_type(value, Value::Type::Object, "an affine exponent");
    for (std::size_t f = 0; f < value.members.size(); ++f) {
      const auto& [field, fv] = value.members[f];
      if (field == "const") {
        require_type(fv, Value::Type::Number, "\"const\"");
        form.constant = fv.num;
      } else if (field == "coeff") {
        require_type(fv, Value::Type::Object, "\"coeff\"");
        for (std::size_t c = 0; c < fv.members.size(); ++c) {
          const auto& [pname, cv] = fv.members[c];
          auto it = std::find(idx.params.begin(), idx.params.end(), pname);
          if (it == idx.params.end()) {
            fail(fv.key_pos[c], "unknown parameter \"" + pname + "\"");
          }
          require_type(cv, Value::Type::Number, "a coefficient");
          form.coeffs[static_cast<std::size_t>(it - idx.params.begin())] =
              cv.num;
        }
      } else {
        fail(value.key_pos[f], "unknown key \"" + field +
                                   "\" (expected \"const\" or \"coeff\")");
      }
    }
  }
  return forms;
}

MonomialIdeal ideal_from_generator_objects(const Value& gens,
                                           const ContextPtr& ctx) {
  KeyIndex idx{ctx->var_names(), {}};
  std::vector<Monomial> monomials;
  for (const auto& gen : gens.elements) {
    monomials.push_back(parse_graded_generator(gen, idx).base);
  }
  return minimalize(ctx, std::move(monomials));
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  Value root = Reader(text).parse_document();
  require_type(root, Value::Type::Object, "a family spec");

  const Value* mode = nullptr;
  const Value* vars = nullptr;
  const Value* params = nullptr;
  const Value* generators = nullptr;
  for (std::size_t m = 0; m < root.members.size(); ++m) {
    const auto& [key, value] = root.members[m];
    if (key == "mode") {
      mode = &value;
    } else if (key == "vars") {
      vars = &value;
    } else if (key == "params") {
      params = &value;
    } else if (key == "generators") {
      generators = &value;
    } else {
      fail(root.key_pos[m], "unknown key \"" + key + "\"");
    }
  }
  if (!mode) fail(root.pos, "missing \"mode\"");
  if (!vars) fail(root.pos, "missing \"vars\"");
  if (!params) fail(root.pos, "missing \"params\"");
  if (!generators) fail(root.pos, "missing \"generators\"");

  require_type(*mode, Value::Type::String, "\"mode\"");
  if (mode->str != "graded" && mode->str != "affine") {
    fail(mode->pos, "\"mode\" must be \"graded\" or \"affine\"");
  }
  auto var_names = parse_name_list(*vars, "\"vars\"");
  auto param_names = parse_name_list(*params, "\"params\"");
  for (const auto& p : param_names) {
    if (std::find(var_names.begin(), var_names.end(), p) != var_names.end()) {
      fail(params->pos, "parameter \"" + p + "\" is also a variable");
    }
  }
  require_type(*generators, Value::Type::Array, "\"generators\"");

  KeyIndex idx{var_names, param_names};
  FamilySpec spec{make_ring_context(var_names), param_names, GradedData{}};
  if (mode->str == "graded") {
    GradedData data;
    for (const auto& gen : generators->elements) {
      data.generators.push_back(parse_graded_generator(gen, idx));
    }
    spec.data = std::move(data);
  } else {
    AffineData data;
    for (const auto& gen : generators->elements) {
      data.generators.push_back(parse_affine_generator(gen, idx));
    }
    spec.data = std::move(data);
  }
  return spec;
}

MonomialIdeal parse_inline_ideal(std::string_view text) {
  Value root = Reader(text).parse_document();
  if (root.type == Value::Type::Array) {
    std::set<std::string> keys;
    for (const auto& gen : root.elements) {
      require_type(gen, Value::Type::Object, "a generator");
      for (const auto& [key, value] : gen.members) {
        (void)value;
        keys.insert(key);
      }
    }
    if (keys.empty()) {
      fail(root.pos,
           "cannot infer variables; use {\"vars\": [...], \"generators\": "
           "[...]}");
    }
    auto ctx =
        make_ring_context(std::vector<std::string>(keys.begin(), keys.end()));
    return ideal_from_generator_objects(root, ctx);
  }
  require_type(root, Value::Type::Object, "an ideal spec");
  const Value* vars = nullptr;
  const Value* generators = nullptr;
  for (std::size_t m = 0; m < root.members.size(); ++m) {
    const auto& [key, value] = root.members[m];
    if (key == "vars") {
      vars = &value;
    } else if (key == "generators") {
      generators = &value;
    } else {
      fail(root.key_pos[m], "unknown key \"" + key + "\"");
    }
  }
  if (!vars) fail(root.pos, "missing \"vars\"");
  if (!generators) fail(root.pos, "missing \"generators\"");
  require_type(*generators, Value::Type::Array, "\"generators\"");
  auto ctx = make_ring_context(parse_name_list(*vars, "\"vars\""));
  return ideal_from_generator_objects(*generators, ctx);
}

MonomialIdeal parse_inline_ideal(std::string_view text, const ContextPtr& ctx) {
  Value root = Reader(text).parse_document();
  require_type(root, Value::Type::Array, "an inline ideal");
  return ideal_from_generator_objects(root, ctx);
}

Box parse_box(std::string_view text) {
  std::vector<std::pair<Integer, Integer>> ranges;
  std::size_t i = 0;
  auto read_number = [&]() -> Integer {
    std::string digits;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      digits += text[i++];
    }
    if (digits.empty()) {
      throw Error(ErrorKind::BadBox,
                  "expected a number in box at offset " + std::to_string(i));
    }
    return Integer(digits);
  };
  for (;;) {
    Integer lo = read_number();
    if (i + 1 >= text.size() || text[i] != '.' || text[i + 1] != '.') {
      throw Error(ErrorKind::BadBox, "expected '..' in box range");
    }
    i += 2;
    Integer hi = read_number();
    ranges.emplace_back(std::move(lo), std::move(hi));
    if (i == text.size()) break;
    if (text[i] != ',') {
      throw Error(ErrorKind::BadBox, "expected ',' between box ranges");
    }
    ++i;
  }
  return Box(std::move(ranges));
}

std::string ideal_spec_json(const MonomialIdeal& ideal) {
  const RingContext& ctx = *ideal.context();
  std::string out = "{\"vars\":[";
  for (std::size_t v = 0; v < ctx.dim(); ++v) {
    if (v) out += ',';
    out += '"' + ctx.var_name(v) + '"';
  }
  out += "],\"generators\":[";
  for (std::size_t g = 0; g < ideal.gens().size(); ++g) {
    if (g) out += ',';
    out += '{';
    bool first = true;
    for (std::size_t v = 0; v < ctx.dim(); ++v) {
      const Integer& e = ideal.gens()[g].exponents[v];
      if (e == 0) continue;
      if (!first) out += ',';
      first = false;
      out += '"' + ctx.var_name(v) + "\":" + e.str();
    }
    out += '}';
  }
  out += "]}";
  return out;
}

}  // namespace upd
