#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "ufc/atoms.hpp"
#include "ufc/error.hpp"
#include "ufc/formulas.hpp"
#include "ufc/lang_ops.hpp"
#include "ufc/language.hpp"
#include "ufc/semigroup.hpp"
#include "ufc/witness.hpp"

namespace ufc {

enum class Format { md, csv, json };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "md") return Format::md;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

/// How a cell is judged: measured == expected, measured < expected, or
/// reported without a verdict.
enum class Relation { eq, lt, none };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::eq:
      return "eq";
    case Relation::lt:
      return "lt";
    case Relation::none:
      return "none";
  }
  return "";
}

struct ReportRow {
  std::string item;
  std::string operation;
  std::size_t m = 0;  // 0 for single-operand cells
  std::size_t n = 0;
  std::string dialects;
  std::uint64_t measured = 0;
  std::uint64_t expected = 0;
  Relation relation = Relation::eq;
  std::optional<std::size_t> raw;
  bool pass = true;
  double elapsed_ms = 0;

  bool asserted() const { return relation != Relation::none; }
};

struct ComplexityReport {
  std::vector<ReportRow> rows;

  std::size_t asserted() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.asserted(); }));
  }
  std::size_t failed() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return r.asserted() && !r.pass; }));
  }
  bool all_pass() const { return failed() == 0; }
};

struct IntRange {
  std::size_t lo = 3;
  std::size_t hi = 6;

  /// "5" or "3..6".
  static IntRange parse(std::string_view text) {
    auto number = [&](std::string_view s) {
      if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error("range: expected N or LO..HI, got \"" + std::string(text) + "\"");
      return static_cast<std::size_t>(std::stoul(std::string(s)));
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
      const auto v = number(text);
      return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
  }

  bool contains(std::size_t v) const { return lo <= v && v <= hi; }
};

inline const std::vector<std::string>& report_items() {
  static const std::vector<std::string> items{"1", "2", "3", "4", "5", "6", "7a", "7b", "7c"};
  return items;
}

struct GridSpec {
  IntRange m;
  IntRange n;
  std::set<std::string> items;  // empty selects everything
  Format format = Format::md;
  std::size_t max_semigroup_n = 7;
  std::size_t max_atoms_n = 5;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool timing = false;
  std::size_t cap = default_closure_cap();

  void validate() const {
    for (const IntRange* r : {&m, &n}) {
      if (r->lo < 3) throw precondition_error("grid: ranges must start at 3 or above");
      if (r->lo > r->hi) throw precondition_error("grid: empty range " + std::to_string(r->lo) + ".." + std::to_string(r->hi));
    }
    for (const auto& it : items) {
      if (it != "7" && std::find(report_items().begin(), report_items().end(), it) == report_items().end())
        throw precondition_error("grid: unknown item \"" + it + "\"");
    }
  }

  bool selects(std::string_view item) const {
    if (items.empty()) return true;
    if (items.count(std::string(item))) return true;
    return item.size() == 2 && item[0] == '7' && items.count("7");
  }
};

namespace detail {

using Job = std::function<ReportRow()>;

inline ReportRow row(std::string item, std::string operation, std::size_t m, std::size_t n, std::string dialects) {
  ReportRow r;
  r.item = std::move(item);
  r.operation = std::move(operation);
  r.m = m;
  r.n = n;
  r.dialects = std::move(dialects);
  return r;
}

inline ReportRow judged(ReportRow r) {
  switch (r.relation) {
    case Relation::eq:
      r.pass = r.measured == r.expected;
      break;
    case Relation::lt:
      r.pass = r.measured < r.expected;
      break;
    case Relation::none:
      r.pass = true;
      break;
  }
  return r;
}

inline ReportRow op_row(std::string item, std::string operation, std::size_t m, std::size_t n, std::string dialects,
                        const OpResult& res, std::uint64_t expected, Relation rel, bool own_alphabet = false) {
  ReportRow r = row(std::move(item), std::move(operation), m, n, std::move(dialects));
  r.measured = own_alphabet ? language_complexity(res.result) : res.complexity();
  r.expected = expected;
  r.relation = rel;
  r.raw = res.raw_states;
  return judged(std::move(r));
}

inline void add_item1(const GridSpec& g, std::vector<Job>& jobs) {
  for (std::size_t n = g.n.lo; n <= g.n.hi && n <= g.max_semigroup_n; ++n) {
    jobs.push_back([n, cap = g.cap] {
      const auto rep = transition_semigroup_size(make_witness(n, "a,b,c"), cap);
      ReportRow r = row("1", "semigroup", 0, n, "a,b,c");
      r.measured = rep.size;
      r.expected = formulas::max_semigroup(n);
      r.pass = !rep.exceeded_cap;
      return rep.exceeded_cap ? r : judged(r);
    });
  }
  // Two letters never suffice.
  for (std::size_t n = std::max<std::size_t>(g.n.lo, 3); n <= std::min<std::size_t>(g.n.hi, 4); ++n) {
    for (const char* dialect : {"a,b", "a,-,c", "-,b,c"}) {
      jobs.push_back([n, dialect, cap = g.cap] {
        const auto dia = DialectSpec::parse(dialect);
        const auto roles = witness_roles(n);
        std::vector<Transformation> gens;
        for (std::size_t i = 0; i < 3; ++i)
          if (dia.role(i)) gens.push_back(roles[i]);
        const auto rep = semigroup_closure(gens, cap);
        ReportRow r = row("1", "semigroup, two letters", 0, n, dialect);
        r.measured = rep.size;
        r.expected = formulas::max_semigroup(n);
        r.relation = Relation::lt;
        return judged(r);
      });
    }
  }
}

inline void add_item2(const GridSpec& g, std::vector<Job>& jobs) {
  for (std::size_t n = g.n.lo; n <= g.n.hi; ++n) {
    jobs.push_back([n] {
      const auto q = quotient_complexities(make_witness(n, "a,b"));
      ReportRow r = row("2", "quotients (min complexity)", 0, n, "a,b");
      r.measured = q.empty() ? 0 : *std::min_element(q.begin(), q.end());
      r.expected = n;
      r = judged(r);
      r.pass = r.pass && q.size() == n && std::all_of(q.begin(), q.end(), [n](std::size_t x) { return x == n; });
      return r;
    });
  }
}

inline void add_item3(const GridSpec& g, std::vector<Job>& jobs) {
  for (std::size_t n = g.n.lo; n <= g.n.hi; ++n) {
    jobs.push_back([n] {
      return op_row("3", "reverse", 0, n, "a,b,c", reverse(make_witness(n, "a,b,c")), formulas::max_reversal(n),
                    Relation::eq);
    });
    if (n > g.max_semigroup_n) continue;
    jobs.push_back([n, cap = g.cap] {
      ReportRow r = row("3", "atom count", 0, n, "a,b,c");
      r.measured = atom_count(make_witness(n, "a,b,c"), cap);
      r.expected = formulas::max_reversal(n);
      return judged(r);
    });
  }
}

inline std::vector<ReportRow> item4_rows(std::size_t n, std::size_t cap) {
  const auto rep = atoms_report(make_witness(n, "a,b,c"), n, cap);
  std::vector<ReportRow> rows;
  for (const auto& a : rep.rows) {
    ReportRow r = row("4", "atom S=" + a.set.to_string(), 0, n, "a,b,c");
    r.measured = a.complexity;
    r.expected = atom_complexity_formula(n, a.set.size());
    rows.push_back(judged(r));
  }
  return rows;
}

inline void add_item5(const GridSpec& g, std::vector<Job>& jobs) {
  for (std::size_t n = g.n.lo; n <= g.n.hi; ++n) {
    jobs.push_back([n] {
      return op_row("5", "star", 0, n, "a,b", star(make_witness(n, "a,b")), formulas::max_star(n), Relation::eq);
    });
  }
}

inline void add_item6(const GridSpec& g, std::vector<Job>& jobs) {
  for (std::size_t m = g.m.lo; m <= g.m.hi; ++m) {
    for (std::size_t n = g.n.lo; n <= g.n.hi; ++n) {
      jobs.push_back([m, n] {
        return op_row("6", "concat restricted", m, n, "a,b,c | a,b,c",
                      concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c"), AlphabetMode::restricted),
                      formulas::max_product(m, n), Relation::eq);
      });
      jobs.push_back([m, n] {
        return op_row("6", "concat unrestricted", m, n, "a,b,c | a,b,c,d",
                      concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c,d"), AlphabetMode::unrestricted),
                      formulas::max_product_unrestricted(m, n), Relation::eq);
      });
    }
  }
}

inline void add_item7(const GridSpec& g, std::vector<Job>& jobs) {
  for (const char* item : {"7a", "7b", "7c"}) {
    if (!g.selects(item)) continue;
    const std::string tag = item;
    for (std::size_t m = g.m.lo; m <= g.m.hi; ++m) {
      for (std::size_t n = g.n.lo; n <= g.n.hi; ++n) {
        if (tag == "7b" && m == n) continue;
        for (BoolOp op : BoolOp::proper_named()) {
          jobs.push_back([tag, m, n, op] {
            if (tag == "7c") {
              const auto [x, y] = boolean_witness_pair(m, n);
              std::uint64_t expected = formulas::max_boolean_unrestricted(m, n);
              if (op.table() == BoolOp::difference().table()) expected = formulas::witness_difference_unrestricted(m, n);
              if (op.table() == BoolOp::intersection().table()) expected = formulas::max_boolean(m, n);
              return op_row(tag, std::string(op.name()) + " unrestricted", m, n, "a,b,-,c | b,a,-,d",
                            boolean(x, y, op, AlphabetMode::unrestricted), expected, Relation::eq, true);
            }
            const char* second = tag == "7a" ? "b,a" : "a,b";
            const Relation rel = tag == "7a" && m == 3 && n == 3 ? Relation::none : Relation::eq;
            return op_row(tag, std::string(op.name()), m, n, std::string("a,b | ") + second,
                          boolean(make_witness(m, "a,b"), make_witness(n, second), op, AlphabetMode::restricted),
                          formulas::max_boolean(m, n), rel);
          });
        }
      }
    }
  }
}

inline void run_jobs(std::vector<Job>& jobs, std::vector<ReportRow>& out, std::size_t threads) {
  out.assign(jobs.size(), ReportRow{});
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const auto start = std::chrono::steady_clock::now();
      try {
        out[j] = jobs[j]();
      } catch (...) {
        errors[j] = std::current_exception();
      }
      out[j].elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

/// Evaluates every selected cell of the grid. Cells run in parallel; rows
/// come back ordered by item, then m, n and operation as generated.
inline ComplexityReport run_verification(const GridSpec& grid) {
  grid.validate();
  std::vector<detail::Job> jobs;
  if (grid.selects("1")) detail::add_item1(grid, jobs);
  if (grid.selects("2")) detail::add_item2(grid, jobs);
  if (grid.selects("3")) detail::add_item3(grid, jobs);
  if (grid.selects("5")) detail::add_item5(grid, jobs);
  if (grid.selects("6")) detail::add_item6(grid, jobs);
  detail::add_item7(grid, jobs);
  // Item 4 jobs each yield many rows, so they get their own slots.
  std::vector<std::size_t> atom_ns;
  if (grid.selects("4"))
    for (std::size_t n = grid.n.lo; n <= grid.n.hi && n <= grid.max_atoms_n; ++n) atom_ns.push_back(n);
  std::vector<std::vector<ReportRow>> atom_rows(atom_ns.size());
  std::vector<detail::Job> all;
  for (std::size_t k = 0; k < atom_ns.size(); ++k) {
    all.push_back([&, k] {
      atom_rows[k] = detail::item4_rows(atom_ns[k], grid.cap);
      return ReportRow{};
    });
  }
  const std::size_t atom_jobs = all.size();
  all.insert(all.end(), jobs.begin(), jobs.end());

  std::vector<ReportRow> done;
  detail::run_jobs(all, done, grid.threads);

  auto order = [](const std::string& item) {
    const auto& items = report_items();
    return std::find(items.begin(), items.end(), item) - items.begin();
  };
  ComplexityReport report;
  std::size_t k = 0;
  for (std::size_t j = atom_jobs; j < done.size(); ++j) {
    while (k < atom_rows.size() && order("4") < order(done[j].item)) {
      for (auto r : atom_rows[k]) {
        r.elapsed_ms = done[k].elapsed_ms / static_cast<double>(atom_rows[k].size());
        report.rows.push_back(r);
      }
      ++k;
    }
    report.rows.push_back(done[j]);
  }
  for (; k < atom_rows.size(); ++k) {
    for (auto r : atom_rows[k]) {
      r.elapsed_ms = done[k].elapsed_ms / static_cast<double>(atom_rows[k].size());
      report.rows.push_back(r);
    }
  }
  return report;
}

namespace detail {

inline std::string item_title(std::string_view item) {
  if (item == "1") return "Item 1: syntactic semigroup";
  if (item == "2") return "Item 2: quotients";
  if (item == "3") return "Item 3: reversal and atom count";
  if (item == "4") return "Item 4: atom complexities";
  if (item == "5") return "Item 5: star";
  if (item == "6") return "Item 6: product";
  if (item == "7a") return "Item 7(a): restricted boolean operations on D_m(a,b), D_n(b,a)";
  if (item == "7b") return "Item 7(b): restricted boolean operations on D_m(a,b), D_n(a,b), m != n";
  if (item == "7c") return "Item 7(c): unrestricted boolean operations on D'_m(a,b,-,c), D_n(b,a,-,d)";
  return "Item " + std::string(item);
}

inline std::string verdict(const ReportRow& r) {
  if (!r.asserted()) return "reported";
  return r.pass ? "pass" : "FAIL";
}

inline std::string expectation(const ReportRow& r) {
  switch (r.relation) {
    case Relation::eq:
      return "= " + std::to_string(r.expected);
    case Relation::lt:
      return "< " + std::to_string(r.expected);
    case Relation::none:
      return "(" + std::to_string(r.expected) + ")";
  }
  return {};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string fixed_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << ms;
  return os.str();
}

}  // namespace detail

/// Renders the report. Timings are left out unless `timing` is set, so that
/// identical runs give identical bytes.
inline std::string render(const ComplexityReport& report, Format format, bool timing = false) {
  const std::size_t asserted = report.asserted();
  const std::size_t failed = report.failed();
  std::ostringstream os;
  switch (format) {
    case Format::md: {
      os << "# Verification report\n";
      std::string current;
      for (const auto& r : report.rows) {
        if (r.item != current) {
          current = r.item;
          os << "\n## " << detail::item_title(r.item) << "\n\n";
          os << "| m | n | operation | dialects | measured | expected | raw | result |" << (timing ? " ms |" : "") << "\n";
          os << "|---|---|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
        }
        os << "| " << (r.m ? std::to_string(r.m) : "-") << " | " << r.n << " | " << r.operation << " | " << r.dialects
           << " | " << r.measured << " | " << detail::expectation(r) << " | " << (r.raw ? std::to_string(*r.raw) : "-")
           << " | " << detail::verdict(r) << " |";
        if (timing) os << " " << detail::fixed_ms(r.elapsed_ms) << " |";
        os << "\n";
      }
      os << "\n" << report.rows.size() << " cells, " << asserted << " asserted, " << asserted - failed << " passed, "
         << failed << " failed\n";
      break;
    }
    case Format::csv: {
      os << "item,operation,m,n,dialects,measured,expected,relation,raw,result" << (timing ? ",elapsed_ms" : "") << "\n";
      for (const auto& r : report.rows) {
        os << r.item << ',' << detail::csv_field(r.operation) << ',' << (r.m ? std::to_string(r.m) : "") << ',' << r.n
           << ',' << detail::csv_field(r.dialects) << ',' << r.measured << ',' << r.expected << ','
           << to_string(r.relation) << ',' << (r.raw ? std::to_string(*r.raw) : "") << ',' << detail::verdict(r);
        if (timing) os << ',' << detail::fixed_ms(r.elapsed_ms);
        os << "\n";
      }
      break;
    }
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : report.rows) {
        nlohmann::ordered_json j;
        j["item"] = r.item;
        j["operation"] = r.operation;
        j["m"] = r.m ? nlohmann::ordered_json(r.m) : nlohmann::ordered_json(nullptr);
        j["n"] = r.n;
        j["dialects"] = r.dialects;
        j["measured"] = r.measured;
        j["expected"] = r.expected;
        j["relation"] = to_string(r.relation);
        j["raw"] = r.raw ? nlohmann::ordered_json(*r.raw) : nlohmann::ordered_json(nullptr);
        j["pass"] = r.pass;
        if (timing) j["elapsed_ms"] = r.elapsed_ms;
        rows.push_back(std::move(j));
      }
      nlohmann::ordered_json doc;
      doc["rows"] = std::move(rows);
      doc["summary"] = {{"cells", report.rows.size()}, {"asserted", asserted}, {"failed", failed}};
      os << doc.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

/// Semigroup closure summary.
inline std::string render(const ClosureReport& rep, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["size"] = rep.size;
      j["exceeded_cap"] = rep.exceeded_cap;
      j["cap"] = rep.cap;
      if (!rep.elements.empty()) {
        j["elements"] = nlohmann::ordered_json::array();
        for (const auto& t : rep.elements) j["elements"].push_back(format_cycles(t));
      }
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "size,exceeded_cap,cap\n";
      return out + std::to_string(rep.size) + "," + (rep.exceeded_cap ? "true" : "false") + "," +
             std::to_string(rep.cap) + "\n";
    }
    case Format::md:
      break;
  }
  std::string out = rep.exceeded_cap ? "semigroup exceeds cap " + std::to_string(rep.cap) + " (at least " +
                                           std::to_string(rep.size) + " elements)\n"
                                     : "semigroup size " + std::to_string(rep.size) + "\n";
  for (const auto& t : rep.elements) out += "  " + format_cycles(t) + "\n";
  return out;
}

inline std::string render(const AtomReport& rep, Format format) {
  std::ostringstream os;
  auto states = [](StateSet s) {
    std::string out;
    s.for_each([&](std::size_t q) { out += (out.empty() ? "" : " ") + std::to_string(q); });
    return out;
  };
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& r : rep.rows) {
        nlohmann::ordered_json set = nlohmann::ordered_json::array();
        r.set.for_each([&](std::size_t q) { set.push_back(q); });
        rows.push_back({{"set", set},
                        {"nonempty", r.nonempty},
                        {"complexity", r.complexity},
                        {"formula", r.formula},
                        {"matches_formula", r.matches_formula}});
      }
      nlohmann::ordered_json doc;
      doc["n"] = rep.n;
      doc["atom_count"] = rep.atom_count;
      doc["rows"] = std::move(rows);
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "set,nonempty,complexity,formula,matches_formula\n";
      for (const auto& r : rep.rows)
        os << states(r.set) << ',' << (r.nonempty ? "true" : "false") << ',' << r.complexity << ',' << r.formula << ','
           << (r.matches_formula ? "true" : "false") << "\n";
      break;
    case Format::md:
      os << "| S | complexity | formula | matches |\n|---|---|---|---|\n";
      for (const auto& r : rep.rows)
        os << "| {" << states(r.set) << "} | " << (r.nonempty ? std::to_string(r.complexity) : "empty") << " | "
           << r.formula << " | " << (r.matches_formula ? "yes" : "no") << " |\n";
      os << "\n" << rep.atom_count << " atoms, n = " << rep.n << "\n";
      break;
  }
  return os.str();
}

inline std::string render(const OcfpResult& res, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["pass"] = res.pass();
      j["violations"] = res.violations;
      return j.dump(2) + "\n";
    }
    case Format::csv:
      return std::string("pass,violations\n") + (res.pass() ? "true" : "false") + "," +
             detail::csv_field(res.describe()) + "\n";
    case Format::md:
      break;
  }
  return "ocfp: " + res.describe() + "\n";
}

}  // namespace ufc
