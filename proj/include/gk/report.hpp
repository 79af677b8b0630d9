#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

struct Violation {
  std::string law;
  std::string witness;
};

// Outcome of a checking routine: empty means every law held.
struct Report {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }
  void add(std::string law, std::string witness) { items.push_back({std::move(law), std::move(witness)}); }
  void merge(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
  std::string str() const;
};

// A semantic check failed; maps to exit code 1 in the command-line tool.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& msg) : std::runtime_error(msg) {}
  explicit CheckFailure(const Report& r) : std::runtime_error(r.str()), report_(r) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

// Malformed input; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, int line, const std::string& msg)
      : std::runtime_error(where + ":" + std::to_string(line) + ": " + msg) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string Report::str() const {
  std::string s;
  for (const auto& v : items) {
    if (!s.empty()) s += '\n';
    s += v.law + ", witness " + v.witness;
  }
  return s;
}

}  // namespace gk
