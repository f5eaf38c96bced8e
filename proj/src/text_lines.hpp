#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "fsp/error.hpp"

namespace fsp::detail {

struct Line {
  int number = 0;
  std::string key;
  std::vector<std::string> args;

  void expect_args(size_t n) const {
    if (args.size() != n)
      throw ParseError(number, "'" + key + "' expects " + std::to_string(n) + " fields, got " +
                                   std::to_string(args.size()));
  }
  int integer(size_t i) const {
    const std::string& s = args.at(i);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw ParseError(number, "expected an integer, got '" + s + "'");
    return v;
  }
};

// Splits text into whitespace-separated records, dropping `#` comments and
// blank lines. The first record must equal `header`.
class LineReader {
 public:
  LineReader(const std::string& text, std::string header) : in_(text), header_(std::move(header)) {}

  bool next(Line& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::istringstream fields(raw);
      std::vector<std::string> tokens;
      for (std::string t; fields >> t;) tokens.push_back(t);
      if (tokens.empty()) continue;
      if (!seen_header_) {
        std::string joined;
        for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
        if (joined != header_) throw ParseError(number_, "expected header '" + header_ + "'");
        seen_header_ = true;
        continue;
      }
      out.number = number_;
      out.key = tokens.front();
      out.args.assign(tokens.begin() + 1, tokens.end());
      return true;
    }
    if (!seen_header_) throw ParseError(number_, "missing header '" + header_ + "'");
    return false;
  }

 private:
  std::istringstream in_;
  std::string header_;
  int number_ = 0;
  bool seen_header_ = false;
};

}  // namespace fsp::detail
