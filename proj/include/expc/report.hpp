#pragma once

// Named-check tables. Serialized as TSV (check, lhs, rhs, verdict) followed
// by one summary line: verdict=<pass|fail> failing=<comma list>.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace expc {

struct CheckRow {
  std::string name;
  std::string lhs;
  std::string rhs;
  enum class Verdict { pass, fail, info } verdict = Verdict::pass;
};

class AuditReport {
 public:
  AuditReport() = default;
  explicit AuditReport(std::string title) : title_(std::move(title)) {}

  void check(std::string name, std::string lhs, std::string rhs, bool ok) {
    rows_.push_back({std::move(name), std::move(lhs), std::move(rhs), ok ? CheckRow::Verdict::pass : CheckRow::Verdict::fail});
  }

  /// A row that is reported but never affects the verdict.
  void info(std::string name, std::string lhs, std::string rhs = "-") {
    rows_.push_back({std::move(name), std::move(lhs), std::move(rhs), CheckRow::Verdict::info});
  }

  void append(const AuditReport& other, const std::string& prefix = "") {
    for (auto row : other.rows_) {
      row.name = prefix + row.name;
      rows_.push_back(std::move(row));
    }
  }

  const std::string& title() const noexcept { return title_; }
  const std::vector<CheckRow>& rows() const noexcept { return rows_; }

  const CheckRow* find(const std::string& name) const {
    for (const auto& r : rows_)
      if (r.name == name) return &r;
    return nullptr;
  }

  bool passed() const {
    for (const auto& r : rows_)
      if (r.verdict == CheckRow::Verdict::fail) return false;
    return true;
  }

  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& r : rows_)
      if (r.verdict == CheckRow::Verdict::fail) out.push_back(r.name);
    return out;
  }

  void write_tsv(std::ostream& out) const {
    if (!title_.empty()) out << "# " << title_ << '\n';
    out << "check\tlhs\trhs\tverdict\n";
    for (const auto& r : rows_) {
      const char* v = r.verdict == CheckRow::Verdict::pass ? "pass" : r.verdict == CheckRow::Verdict::fail ? "fail" : "info";
      out << r.name << '\t' << r.lhs << '\t' << r.rhs << '\t' << v << '\n';
    }
    out << summary_line() << '\n';
  }

  std::string summary_line() const {
    std::string line = std::string("verdict=") + (passed() ? "pass" : "fail") + " failing=";
    bool first = true;
    for (const auto& name : failing()) {
      if (!first) line += ',';
      line += name;
      first = false;
    }
    return line;
  }

 private:
  std::string title_;
  std::vector<CheckRow> rows_;
};

inline std::string str(const mpz_class& z) { return z.get_str(); }

inline std::string str(const mpq_class& q) { return q.get_str(); }

/// Fixed significant-digit rendering, stable across runs.
inline std::string str(long double x, int digits = 12) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

template <typename Int>
  requires std::is_integral_v<Int>
inline std::string str(Int v) {
  return std::to_string(v);
}

/// Decimal rendering of a rational with `digits` significant digits.
inline std::string decimal(const mpq_class& q, int digits = 12) {
  mpf_class f(q, 256);
  std::ostringstream out;
  out.precision(digits);
  out << f;
  return out.str();
}

}  // namespace expc
