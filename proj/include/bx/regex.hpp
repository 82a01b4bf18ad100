#pragma once

#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bx/outcome.hpp"

namespace bx {

/// Small non-backtracking regular expression engine.
///
/// Patterns are compiled to a Thompson NFA and simulated breadth-first, so
/// matching is O(|pattern| * |input|) and never backtracks.  All matching is
/// anchored at a given offset.
///
/// Dialect (byte oriented):
///   literals, escaped metacharacters (\. \* \\ ...), `.` (any byte,
///   including newline), classes `[a-z]`, `[^...]`, shorthand \d \w \s and
///   their negations \D \W \S (also inside classes), escapes \n \t \r,
///   groups `( )` and `(?: )` (non-capturing; nothing is captured),
///   alternation `|`, and greedy quantifiers `* + ? {m} {m,} {m,n}`.
/// Rejected: anchors, lazy/possessive quantifiers, backreferences and
/// lookaround.
class Regex {
 public:
  static Outcome<Regex> compile(std::string_view pattern) {
    Parser parser{pattern};
    auto program = parser.parse();
    if (program.is_error())
      return failure("invalid regex \"" + std::string(pattern) + "\": " + program.message());
    return Regex(std::string(pattern), std::make_shared<const Program>(std::move(program).data()));
  }

  /// Escapes every metacharacter so that the pattern matches `text` only.
  static std::string escape(std::string_view text) {
    static constexpr std::string_view kMeta = "\\.^$|?*+()[]{}";
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
      if (kMeta.find(c) != std::string_view::npos) out.push_back('\\');
      out.push_back(c);
    }
    return out;
  }

  /// Compiles a pattern matching exactly `text`.
  static Regex literal(std::string_view text) { return compile(escape(text)).data(); }

  const std::string& pattern() const noexcept { return pattern_; }

  bool full_match(std::string_view input) const {
    auto length = longest_prefix(input, 0);
    return length && *length == input.size();
  }

  /// Length of the longest match starting exactly at `offset`, if any.
  std::optional<std::size_t> longest_prefix(std::string_view input, std::size_t offset) const {
    const auto& code = program_->code;
    ThreadList current(code.size());
    ThreadList next(code.size());
    std::optional<std::size_t> best;

    add_thread(current, program_->start);
    for (std::size_t pos = offset;; ++pos) {
      if (current.contains_match) best = pos - offset;
      if (pos == input.size() || current.states.empty()) break;
      auto byte = static_cast<unsigned char>(input[pos]);
      next.clear();
      for (std::uint32_t pc : current.states) {
        const auto& inst = code[pc];
        if (inst.op == Op::Byte && inst.bytes.test(byte)) add_thread(next, pc + 1);
      }
      std::swap(current, next);
    }
    return best;
  }

 private:
  enum class Op : std::uint8_t { Byte, Split, Jump, Match };

  struct Instruction {
    Op op;
    std::bitset<256> bytes;
    std::uint32_t x = 0;
    std::uint32_t y = 0;
  };

  struct Program {
    std::vector<Instruction> code;
    std::uint32_t start = 0;
  };

  struct ThreadList {
    explicit ThreadList(std::size_t n) : seen(n, false) {}
    void clear() {
      for (auto pc : visited) seen[pc] = false;
      visited.clear();
      states.clear();
      contains_match = false;
    }
    std::vector<bool> seen;
    std::vector<std::uint32_t> visited;
    std::vector<std::uint32_t> states;  // Byte instructions only
    bool contains_match = false;
  };

  void add_thread(ThreadList& list, std::uint32_t pc) const {
    std::vector<std::uint32_t> stack{pc};
    while (!stack.empty()) {
      auto at = stack.back();
      stack.pop_back();
      if (list.seen[at]) continue;
      list.seen[at] = true;
      list.visited.push_back(at);
      const auto& inst = program_->code[at];
      switch (inst.op) {
        case Op::Byte: list.states.push_back(at); break;
        case Op::Match: list.contains_match = true; break;
        case Op::Jump: stack.push_back(inst.x); break;
        case Op::Split:
          stack.push_back(inst.y);
          stack.push_back(inst.x);
          break;
      }
    }
  }

  // -- parsing --------------------------------------------------------------

  struct Node {
    enum class Kind { Empty, Bytes, Concat, Alternate, Repeat } kind = Kind::Empty;
    std::bitset<256> bytes;
    std::vector<Node> children;
    int min = 0;
    int max = -1;  // -1: unbounded
  };

  static constexpr int kMaxRepeat = 1000;

  struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    Outcome<Program> parse() {
      auto root = parse_alternation(0);
      if (root.is_error()) return root.error();
      if (pos != text.size()) return failure("unbalanced ')' at offset " + std::to_string(pos));
      Program program;
      Compiler compiler{program.code};
      compiler.emit(root.data());
      program.code.push_back(Instruction{Op::Match, {}, 0, 0});
      if (program.code.size() > 200000) return failure("pattern too large");
      return program;
    }

    bool at_end() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    Outcome<Node> parse_alternation(int depth) {
      if (depth > 200) return failure("nesting too deep");
      std::vector<Node> branches;
      auto first = parse_sequence(depth);
      if (first.is_error()) return first;
      branches.push_back(std::move(first).data());
      while (!at_end() && peek() == '|') {
        ++pos;
        auto next = parse_sequence(depth);
        if (next.is_error()) return next;
        branches.push_back(std::move(next).data());
      }
      if (branches.size() == 1) return std::move(branches.front());
      Node node;
      node.kind = Node::Kind::Alternate;
      node.children = std::move(branches);
      return node;
    }

    Outcome<Node> parse_sequence(int depth) {
      Node node;
      node.kind = Node::Kind::Concat;
      while (!at_end() && peek() != '|' && peek() != ')') {
        auto atom = parse_atom(depth);
        if (atom.is_error()) return atom;
        auto repeated = parse_quantifiers(std::move(atom).data());
        if (repeated.is_error()) return repeated;
        node.children.push_back(std::move(repeated).data());
      }
      return node;
    }

    Outcome<Node> parse_quantifiers(Node atom) {
      while (!at_end()) {
        char c = peek();
        int min = 0;
        int max = -1;
        if (c == '*') {
          ++pos;
        } else if (c == '+') {
          min = 1;
          ++pos;
        } else if (c == '?') {
          max = 1;
          ++pos;
        } else if (c == '{') {
          auto bounds = parse_bounds();
          if (bounds.is_error()) return bounds.error();
          min = bounds.data().first;
          max = bounds.data().second;
        } else {
          break;
        }
        if (!at_end() && (peek() == '?' || peek() == '+'))
          return failure("lazy and possessive quantifiers are not supported");
        Node node;
        node.kind = Node::Kind::Repeat;
        node.min = min;
        node.max = max;
        node.children.push_back(std::move(atom));
        atom = std::move(node);
        if (!at_end() && (peek() == '*' || peek() == '{'))
          return failure("stacked quantifiers are not supported; wrap the inner repetition in a group");
      }
      return atom;
    }

    Outcome<std::pair<int, int>> parse_bounds() {
      ++pos;  // '{'
      auto number = [&]() -> std::optional<int> {
        std::size_t begin = pos;
        int value = 0;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
          value = value * 10 + (peek() - '0');
          if (value > kMaxRepeat) return std::nullopt;
          ++pos;
        }
        if (pos == begin) return std::nullopt;
        return value;
      };
      auto min = number();
      if (!min) return failure("bad repetition bound at offset " + std::to_string(pos));
      int max = *min;
      if (!at_end() && peek() == ',') {
        ++pos;
        if (!at_end() && peek() == '}') {
          max = -1;
        } else {
          auto upper = number();
          if (!upper || *upper < *min) return failure("bad repetition bound at offset " + std::to_string(pos));
          max = *upper;
        }
      }
      if (at_end() || peek() != '}') return failure("unterminated repetition bound");
      ++pos;
      return std::pair{*min, max};
    }

    static Node bytes_node(const std::bitset<256>& bytes) {
      Node node;
      node.kind = Node::Kind::Bytes;
      node.bytes = bytes;
      return node;
    }

    static std::bitset<256> single(unsigned char c) {
      std::bitset<256> bits;
      bits.set(c);
      return bits;
    }

    static std::bitset<256> range(unsigned char lo, unsigned char hi) {
      std::bitset<256> bits;
      for (unsigned c = lo; c <= hi; ++c) bits.set(c);
      return bits;
    }

    static std::optional<std::bitset<256>> shorthand(char c) {
      std::bitset<256> bits;
      switch (c) {
        case 'd': case 'D': bits = range('0', '9'); break;
        case 'w': case 'W': bits = range('a', 'z') | range('A', 'Z') | range('0', '9') | single('_'); break;
        case 's': case 'S':
          for (unsigned char ws : {' ', '\t', '\n', '\r', '\f', '\v'}) bits.set(ws);
          break;
        default: return std::nullopt;
      }
      if (c >= 'A' && c <= 'Z') bits.flip();
      return bits;
    }

    /// Escape after the backslash; returns the byte set it denotes.
    Outcome<std::bitset<256>> parse_escape() {
      if (at_end()) return failure("trailing backslash");
      char c = text[pos++];
      if (auto bits = shorthand(c)) return *bits;
      switch (c) {
        case 'n': return single('\n');
        case 't': return single('\t');
        case 'r': return single('\r');
        case 'f': return single('\f');
        case 'v': return single('\v');
        default: break;
      }
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))
        return failure(std::string("unsupported escape \\") + c);
      return single(static_cast<unsigned char>(c));
    }

    Outcome<Node> parse_class() {
      ++pos;  // '['
      bool negate = false;
      if (!at_end() && peek() == '^') {
        negate = true;
        ++pos;
      }
      std::bitset<256> bits;
      bool first = true;
      while (true) {
        if (at_end()) return failure("unterminated character class");
        char c = peek();
        if (c == ']' && !first) {
          ++pos;
          break;
        }
        first = false;
        std::bitset<256> item;
        std::optional<unsigned char> lo;
        if (c == '\\') {
          ++pos;
          std::size_t before = pos;
          auto esc = parse_escape();
          if (esc.is_error()) return esc.error();
          item = esc.data();
          if (item.count() == 1 && !shorthand(text[before])) {
            for (unsigned b = 0; b < 256; ++b)
              if (item.test(b)) lo = static_cast<unsigned char>(b);
          }
        } else {
          ++pos;
          lo = static_cast<unsigned char>(c);
          item = single(*lo);
        }
        if (lo && pos + 1 < text.size() && peek() == '-' && text[pos + 1] != ']') {
          ++pos;
          unsigned char hi;
          if (peek() == '\\') {
            ++pos;
            auto esc = parse_escape();
            if (esc.is_error()) return esc.error();
            if (esc.data().count() != 1) return failure("invalid class range");
            hi = 0;
            for (unsigned b = 0; b < 256; ++b)
              if (esc.data().test(b)) hi = static_cast<unsigned char>(b);
          } else {
            hi = static_cast<unsigned char>(text[pos++]);
          }
          if (hi < *lo) return failure("invalid class range");
          item = range(*lo, hi);
        }
        bits |= item;
      }
      if (negate) bits.flip();
      return bytes_node(bits);
    }

    Outcome<Node> parse_atom(int depth) {
      char c = peek();
      switch (c) {
        case '(': {
          ++pos;
          if (text.substr(pos, 2) == "?:") {
            pos += 2;
          } else if (!at_end() && peek() == '?') {
            return failure("lookaround and group flags are not supported");
          }
          auto inner = parse_alternation(depth + 1);
          if (inner.is_error()) return inner;
          if (at_end() || peek() != ')') return failure("missing ')'");
          ++pos;
          return inner;
        }
        case '[': return parse_class();
        case '.': {
          ++pos;
          std::bitset<256> all;
          all.set();
          return bytes_node(all);
        }
        case '\\': {
          ++pos;
          auto esc = parse_escape();
          if (esc.is_error()) return esc.error();
          return bytes_node(esc.data());
        }
        case '^':
        case '$': return failure("anchors are not supported; matching is always anchored");
        case '*':
        case '+':
        case '?':
        case '{': return failure(std::string("nothing to repeat before '") + c + "'");
        default:
          ++pos;
          return bytes_node(single(static_cast<unsigned char>(c)));
      }
    }
  };

  struct Compiler {
    std::vector<Instruction>& code;

    std::uint32_t here() const { return static_cast<std::uint32_t>(code.size()); }

    std::uint32_t push(Instruction inst) {
      code.push_back(std::move(inst));
      return here() - 1;
    }

    std::uint32_t emit(const Node& node) {
      std::uint32_t start = here();
      switch (node.kind) {
        case Node::Kind::Empty: break;
        case Node::Kind::Bytes: push(Instruction{Op::Byte, node.bytes, 0, 0}); break;
        case Node::Kind::Concat:
          for (const auto& child : node.children) emit(child);
          break;
        case Node::Kind::Alternate: {
          // split L1, next; L1: a; jmp end; next: split L2, ...
          std::vector<std::uint32_t> jumps;
          for (std::size_t i = 0; i < node.children.size(); ++i) {
            bool last = i + 1 == node.children.size();
            std::uint32_t split = 0;
            if (!last) split = push(Instruction{Op::Split, {}, 0, 0});
            std::uint32_t body = here();
            emit(node.children[i]);
            if (!last) {
              jumps.push_back(push(Instruction{Op::Jump, {}, 0, 0}));
              code[split].x = body;
              code[split].y = here();
            }
          }
          for (auto j : jumps) code[j].x = here();
          break;
        }
        case Node::Kind::Repeat: {
          const Node& child = node.children.front();
          for (int i = 0; i < node.min; ++i) emit(child);
          if (node.max < 0) {
            // L: split body, end; body; jmp L
            std::uint32_t split = push(Instruction{Op::Split, {}, 0, 0});
            emit(child);
            push(Instruction{Op::Jump, {}, split, 0});
            code[split].x = split + 1;
            code[split].y = here();
          } else {
            std::vector<std::uint32_t> splits;
            for (int i = node.min; i < node.max; ++i) {
              splits.push_back(push(Instruction{Op::Split, {}, 0, 0}));
              code[splits.back()].x = here();
              emit(child);
            }
            for (auto s : splits) code[s].y = here();
          }
          break;
        }
      }
      return start;
    }
  };

  Regex(std::string pattern, std::shared_ptr<const Program> program)
      : pattern_(std::move(pattern)), program_(std::move(program)) {}

  std::string pattern_;
  std::shared_ptr<const Program> program_;
};

}  // namespace bx
