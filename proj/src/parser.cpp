#include <cctype>
#include <limits>

#include "lendepth/descriptor.hpp"
#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    skip_space();
    if (at_end()) throw ParseError("trivial group must be written as `1`", pos_);
    if (peek() == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) throw ParseError("unexpected input after `1`", pos_);
      return GroupDescriptor::trivial();
    }
    std::uint64_t u = 0, z = 0;
    std::vector<SimpleType> factors;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (!first) {
        // A separator is either whitespace (already consumed) or '*'.
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (at_end()) throw ParseError("expected a term after `*`", pos_);
        } else if (!saw_space_) {
          throw ParseError("expected whitespace or `*` between terms", pos_);
        }
      } else if (peek() == '*') {
        throw ParseError("expected a term", pos_);
      }
      term(u, z, factors);
      first = false;
    }
    if (u == 0 && z == 0 && factors.empty()) throw ParseError("trivial group must be written as `1`", 0);
    try {
      return GroupDescriptor(u, z, factors);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    saw_space_ = false;
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
      saw_space_ = true;
    }
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", pos_);
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) throw ParseError("number too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  void term(std::uint64_t& u, std::uint64_t& z, std::vector<SimpleType>& factors) {
    const std::size_t start = pos_;
    const char c = peek();
    ++pos_;
    if (c == 'U' || c == 'T') {
      const std::uint64_t n = number();
      if (n > kMaxSolubleDim) throw ParseError("soluble dimension exceeds the cap 2^40", start);
      (c == 'U' ? u : z) += n;
      if (u > kMaxSolubleDim || z > kMaxSolubleDim) throw ParseError("soluble dimension exceeds the cap 2^40", start);
      return;
    }
    const auto family = family_from_letter(c);
    if (!family) throw ParseError(std::string("unexpected character `") + c + "`", start);
    const std::uint64_t rank = number();
    if (rank > kMaxRank) throw ParseError("rank exceeds the cap 2^20", start);
    std::vector<SimpleType> types;
    try {
      types = canonicalize(*family, static_cast<std::uint32_t>(rank));
    } catch (const ValidationError&) {
      throw ParseError("unknown simple type " + std::string(1, c) + std::to_string(rank), start);
    }
    std::uint64_t repeat = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      repeat = number();
      if (repeat == 0) throw ParseError("exponent must be positive", pos_ - 1);
      if (repeat > kMaxMultiplicity) throw ParseError("exponent exceeds the cap 2^20", start);
    }
    for (std::uint64_t i = 0; i < repeat; ++i) factors.insert(factors.end(), types.begin(), types.end());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool saw_space_ = false;
};

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) { return DescriptorParser(text).parse(); }

}  // namespace lendepth
