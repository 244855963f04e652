#include "dangsim/trace.hpp"

#include <cctype>
#include <unordered_set>

namespace dangsim {

namespace {

struct Token {
  std::string_view text;
  uint32_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start),
                      static_cast<uint32_t>(start + 1)});
  }
  return tokens;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<TraceEvent> run() {
    std::vector<TraceEvent> events;
    size_t pos = 0;
    while (pos <= text_.size()) {
      size_t eol = text_.find('\n', pos);
      std::string_view line = text_.substr(
          pos, eol == std::string_view::npos ? text_.size() - pos : eol - pos);
      tokens_ = tokenize(line);
      if (!tokens_.empty()) events.push_back(parse_line());
      ++line_;
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    return events;
  }

 private:
  [[noreturn]] void fail(uint32_t column, const std::string& msg) {
    throw ParseError(line_, column, msg);
  }

  const Token& arg(size_t i, const char* what) {
    if (i >= tokens_.size()) {
      fail(tokens_.back().column, std::string("missing ") + what);
    }
    return tokens_[i];
  }

  void expect_argc(size_t n) {
    if (tokens_.size() > n) {
      fail(tokens_[n].column, "unexpected trailing token '" +
                                  std::string(tokens_[n].text) + "'");
    }
  }

  uint64_t number(const Token& t, const char* what) {
    std::string s(t.text);
    try {
      size_t pos = 0;
      uint64_t v = std::stoull(s, &pos, 0);
      if (pos != s.size()) fail(t.column, std::string("malformed ") + what);
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail(t.column, std::string("malformed ") + what);
    }
  }

  std::string name(const Token& t, bool must_exist) {
    if (!valid_name(t.text)) {
      fail(t.column, "invalid name '" + std::string(t.text) + "'");
    }
    std::string n(t.text);
    if (must_exist && !defined_.contains(n)) {
      fail(t.column, "name '" + n + "' used before alloc");
    }
    return n;
  }

  PtrExpr ptr_expr(const Token& t) {
    if (t.text == "null") return PtrExpr{true, "", 0};
    PtrExpr e;
    size_t plus = t.text.find('+');
    if (plus == std::string_view::npos) {
      e.name = name(t, true);
    } else {
      e.name = name(Token{t.text.substr(0, plus), t.column}, true);
      e.offset = number(
          Token{t.text.substr(plus + 1),
                static_cast<uint32_t>(t.column + plus + 1)},
          "offset");
    }
    return e;
  }

  Loc loc(const Token& t) {
    Loc l;
    auto window = [&](std::string_view prefix, Loc::Kind kind) -> bool {
      if (t.text.rfind(prefix, 0) != 0) return false;
      l.kind = kind;
      l.slot = number(Token{t.text.substr(prefix.size()),
                            static_cast<uint32_t>(t.column + prefix.size())},
                      "slot index");
      if (l.slot >= kMaxWindowSlot) fail(t.column, "slot index out of window");
      return true;
    };
    if (window("stack:", Loc::Kind::Stack)) return l;
    if (window("global:", Loc::Kind::Global)) return l;
    PtrExpr e = ptr_expr(t);
    if (e.is_null) fail(t.column, "null is not a location");
    l.kind = Loc::Kind::Object;
    l.name = e.name;
    l.offset = e.offset;
    return l;
  }

  TraceEvent parse_line() {
    const Token& head = tokens_[0];
    TraceEvent ev;
    ev.line = line_;
    std::string_view op = head.text;

    if (op == "alloc") {
      AllocEvent e;
      e.name = name(arg(1, "object name"), false);
      e.size = number(arg(2, "size"), "size");
      if (tokens_.size() > 3) {
        if (tokens_[3].text != "high") {
          fail(tokens_[3].column, "expected 'high'");
        }
        e.high = true;
        expect_argc(4);
      }
      defined_.insert(e.name);
      ev.op = std::move(e);
    } else if (op == "store") {
      StoreEvent e{loc(arg(1, "location")), ptr_expr(arg(2, "pointer"))};
      expect_argc(3);
      ev.op = std::move(e);
    } else if (op == "storei") {
      StoreDataEvent e{loc(arg(1, "location")),
                       number(arg(2, "value"), "value")};
      expect_argc(3);
      ev.op = std::move(e);
    } else if (op == "load") {
      LoadEvent e{loc(arg(1, "location"))};
      expect_argc(2);
      ev.op = std::move(e);
    } else if (op == "free") {
      FreeEvent e{ptr_expr(arg(1, "pointer"))};
      expect_argc(2);
      ev.op = std::move(e);
    } else if (op == "realloc") {
      ReallocEvent e;
      e.old_name = name(arg(1, "object name"), true);
      e.new_name = name(arg(2, "new object name"), false);
      e.size = number(arg(3, "size"), "size");
      expect_argc(4);
      defined_.insert(e.new_name);
      ev.op = std::move(e);
    } else if (op == "period") {
      expect_argc(1);
      ev.op = PeriodEvent{};
    } else if (op == "flush") {
      expect_argc(1);
      ev.op = FlushEvent{};
    } else if (op == "expect-live" || op == "expect-released") {
      ExpectEvent e;
      e.name = name(arg(1, "object name"), true);
      e.released = op == "expect-released";
      expect_argc(2);
      ev.op = std::move(e);
    } else {
      fail(head.column, "unknown event '" + std::string(op) + "'");
    }
    return ev;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::unordered_set<std::string> defined_;
  uint32_t line_ = 1;
};

std::string hex(uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string render_loc(const Loc& l) {
  switch (l.kind) {
    case Loc::Kind::Stack:
      return "stack:" + std::to_string(l.slot);
    case Loc::Kind::Global:
      return "global:" + std::to_string(l.slot);
    case Loc::Kind::Object:
      return l.offset == 0 ? l.name : l.name + "+" + hex(l.offset);
  }
  return {};
}

std::string render_ptr(const PtrExpr& e) {
  if (e.is_null) return "null";
  return e.offset == 0 ? e.name : e.name + "+" + hex(e.offset);
}

struct Renderer {
  std::string operator()(const AllocEvent& e) const {
    std::string s = "alloc " + e.name + " " + std::to_string(e.size);
    if (e.high) s += " high";
    return s;
  }
  std::string operator()(const StoreEvent& e) const {
    return "store " + render_loc(e.loc) + " " + render_ptr(e.value);
  }
  std::string operator()(const StoreDataEvent& e) const {
    return "storei " + render_loc(e.loc) + " " + std::to_string(e.value);
  }
  std::string operator()(const LoadEvent& e) const {
    return "load " + render_loc(e.loc);
  }
  std::string operator()(const FreeEvent& e) const {
    return "free " + render_ptr(e.ptr);
  }
  std::string operator()(const ReallocEvent& e) const {
    return "realloc " + e.old_name + " " + e.new_name + " " +
           std::to_string(e.size);
  }
  std::string operator()(const PeriodEvent&) const { return "period"; }
  std::string operator()(const FlushEvent&) const { return "flush"; }
  std::string operator()(const ExpectEvent& e) const {
    return (e.released ? "expect-released " : "expect-live ") + e.name;
  }
};

}  // namespace

std::vector<TraceEvent> parse_trace(std::string_view text) {
  return Parser(text).run();
}

std::string render_trace(const std::vector<TraceEvent>& events) {
  std::string out;
  for (const TraceEvent& ev : events) {
    out += std::visit(Renderer{}, ev.op);
    out += '\n';
  }
  return out;
}

}  // namespace dangsim
