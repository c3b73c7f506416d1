// ufc: witness generation, language operations and the complexity
// verification grid for deterministic union-free languages.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "ufc/ufc.hpp"

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

struct Globals {
  std::string format = "md";
  std::string out;
  bool quiet = false;

  ufc::Format fmt() const { return *ufc::parse_format(format); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ufc::error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ufc::error("cannot write " + path);
}

ufc::Dfa load_dfa(const std::string& path) {
  try {
    auto a = ufc::parse_automaton(read_file(path));
    if (auto* d = std::get_if<ufc::Dfa>(&a)) return std::move(*d);
    return ufc::determinize(std::get<ufc::Nfa>(a));
  } catch (const ufc::parse_error& e) {
    throw ufc::parse_error(path + ": " + e.what());
  }
}

// Reports go to --out when given, otherwise to stdout.
void emit(const Globals& g, const std::string& text) {
  if (!g.out.empty()) {
    write_file(g.out, text);
  } else if (!g.quiet) {
    std::cout << text;
  }
}

void say(const Globals& g, const std::string& line) {
  if (!g.quiet) std::cout << line << "\n";
}

std::string letter_list(const ufc::Alphabet& sigma) {
  std::string out;
  for (char c : sigma.letters()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

ufc::StateSet parse_set(std::string text) {
  ufc::StateSet s;
  std::string digits;
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ') continue;
    if (c == ',') {
      if (digits.empty()) throw ufc::parse_error("--set: empty element in \"" + text + "\"");
      s.insert(std::stoul(digits));
      digits.clear();
    } else if (c >= '0' && c <= '9' && digits.size() < 3) {
      digits += c;
    } else {
      throw ufc::parse_error("--set: expected states like 0,2 in \"" + text + "\"");
    }
  }
  if (!digits.empty()) {
    const auto q = std::stoul(digits);
    if (q >= ufc::StateSet::capacity) throw ufc::parse_error("--set: state " + digits + " out of range");
    s.insert(q);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic union-free languages: witnesses, operations and complexity checks", "ufc"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--out", g.out, "Write the automaton or report to this file");
  app.add_flag("--quiet", g.quiet, "Print nothing on success");

  std::size_t witness_n = 0;
  std::string dialect = "a,b,c,d";
  auto* witness = app.add_subcommand("witness", "Write the witness DFA D_n in a dialect");
  witness->add_option("--n", witness_n, "Number of states (at least 3)")->required();
  witness->add_option("--dialect", dialect, "Letters for the roles a,b,c,d; '-' deletes a role");

  std::string op_name, in1, in2, mode_name = "restricted";
  auto* op = app.add_subcommand("op", "Apply a language operation and minimize");
  op->add_option("name", op_name, "reverse | star | concat | union | intersect | diff | symdiff")
      ->required()
      ->check(CLI::IsMember({"reverse", "star", "concat", "union", "intersect", "diff", "symdiff"}));
  op->add_option("--in", in1, "Operand automaton")->required();
  op->add_option("--in2", in2, "Second operand for binary operations");
  op->add_option("--mode", mode_name, "Alphabet mode for binary operations")
      ->check(CLI::IsMember({"restricted", "unrestricted"}));

  std::size_t cap = ufc::default_closure_cap();
  bool elements = false;
  auto* semigroup = app.add_subcommand("semigroup", "Size of the transition semigroup of a minimal DFA");
  semigroup->add_option("--in", in1, "Automaton file")->required();
  semigroup->add_option("--cap", cap, "Closure cap (default UFC_MAX_CLOSURE or 2000000)");
  semigroup->add_flag("--elements", elements, "List the elements in cycle notation");

  std::string set_text;
  std::size_t max_n = ufc::default_atom_sweep_limit;
  auto* atoms = app.add_subcommand("atoms", "Atoms of the language of a minimal DFA");
  atoms->add_option("--in", in1, "Automaton file")->required();
  atoms->add_option("--set", set_text, "One atom, given by its set S of states, e.g. 0,2");
  atoms->add_option("--max-n", max_n, "Largest state count for the full atom table");
  atoms->add_option("--cap", cap, "Closure cap for the transition monoid");

  auto* ocfp = app.add_subcommand("ocfp", "Check the one-cycle-free-path property");
  ocfp->add_option("--in", in1, "Automaton file")->required();

  ufc::GridSpec grid;
  std::string m_range = "3..6", n_range = "3..6", items;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Sweep the witness grid and compare with the closed-form bounds");
  verify->add_option("--m", m_range, "Range of m, e.g. 3..6");
  verify->add_option("--n", n_range, "Range of n, e.g. 3..6");
  verify->add_option("--items", items, "Comma-separated items: 1,2,3,4,5,6,7,7a,7b,7c");
  verify->add_option("--max-semigroup-n", grid.max_semigroup_n,
                     "Largest n for semigroup and atom-count cells; n = 8 needs about 130 MB");
  verify->add_option("--max-atoms-n", grid.max_atoms_n, "Largest n for the per-atom table");
  verify->add_option("--threads", grid.threads, "Worker threads (0: one per core)");
  verify->add_flag("--timing", timing, "Include elapsed milliseconds per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    const ufc::Format fmt = g.fmt();
    if (*witness) {
      const ufc::Dfa d = ufc::make_witness(witness_n, dialect);
      const auto text = ufc::to_json(d) + "\n";
      const std::string summary = "D_" + std::to_string(witness_n) + "(" + ufc::DialectSpec::parse(dialect).to_string() +
                                  "): " + std::to_string(d.state_count()) + " states, alphabet {" +
                                  letter_list(d.alphabet()) + "}, minimal: " +
                                  (ufc::is_minimal(d) ? "yes" : "no") + ", ocfp: " + ufc::ocfp_check(d).describe();
      if (g.out.empty()) {
        if (!g.quiet) std::cout << text;
        if (!g.quiet) std::cerr << summary << "\n";
      } else {
        write_file(g.out, text);
        say(g, summary);
      }
      return ok;
    }

    if (*op) {
      const ufc::Dfa x = load_dfa(in1);
      const auto mode = mode_name == "restricted" ? ufc::AlphabetMode::restricted : ufc::AlphabetMode::unrestricted;
      const bool binary = op_name != "reverse" && op_name != "star";
      if (binary && in2.empty()) throw CLI::RequiredError("--in2");
      ufc::OpResult res = [&] {
        if (op_name == "reverse") return ufc::reverse(x);
        if (op_name == "star") return ufc::star(x);
        const ufc::Dfa y = load_dfa(in2);
        if (op_name == "concat") return ufc::concat(x, y, mode);
        return ufc::boolean(x, y, *ufc::BoolOp::from_name(op_name), mode);
      }();
      if (!g.out.empty()) write_file(g.out, ufc::to_json(res.result) + "\n");
      if (fmt == ufc::Format::json) {
        nlohmann::ordered_json j;
        j["operation"] = op_name;
        if (binary) j["mode"] = mode_name;
        j["complexity"] = res.complexity();
        j["raw"] = res.raw_states;
        j["upper_bound"] = res.upper_bound;
        j["within_bound"] = res.within_bound;
        if (!g.quiet) std::cout << j.dump(2) << "\n";
      } else if (fmt == ufc::Format::csv) {
        say(g, "operation,complexity,raw,upper_bound,within_bound\n" + op_name + "," + std::to_string(res.complexity()) +
                   "," + std::to_string(res.raw_states) + "," + std::to_string(res.upper_bound) + "," +
                   (res.within_bound ? "true" : "false"));
      } else {
        say(g, "complexity " + std::to_string(res.complexity()) + " (raw " + std::to_string(res.raw_states) + ")");
      }
      return ok;
    }

    if (*semigroup) {
      const auto rep = ufc::transition_semigroup_size(load_dfa(in1), cap, elements);
      emit(g, ufc::render(rep, fmt));
      return ok;
    }

    if (*atoms) {
      const ufc::Dfa d = load_dfa(in1);
      if (!atoms->get_option("--set")->empty()) {
        const auto s = parse_set(set_text);
        const auto a = ufc::atom(d, s, cap);
        if (!a) {
          say(g, "atom " + s.to_string() + " is empty");
          return ok;
        }
        if (!g.out.empty()) write_file(g.out, ufc::to_json(*a) + "\n");
        if (fmt == ufc::Format::json) {
          nlohmann::ordered_json j;
          j["set"] = s.to_string();
          j["complexity"] = a->state_count();
          j["automaton"] = nlohmann::ordered_json::parse(ufc::to_json(*a));
          if (!g.quiet) std::cout << j.dump(2) << "\n";
        } else {
          say(g, "atom " + s.to_string() + ": complexity " + std::to_string(a->state_count()));
          if (g.out.empty()) say(g, ufc::to_json(*a));
        }
        return ok;
      }
      emit(g, ufc::render(ufc::atoms_report(d, max_n, cap), fmt));
      return ok;
    }

    if (*ocfp) {
      const auto res = ufc::ocfp_check(load_dfa(in1));
      emit(g, ufc::render(res, fmt));
      return res.pass() ? ok : failed;
    }

    if (*verify) {
      grid.m = ufc::IntRange::parse(m_range);
      grid.n = ufc::IntRange::parse(n_range);
      grid.format = fmt;
      grid.timing = timing;
      std::stringstream list(items);
      for (std::string item; std::getline(list, item, ',');)
        if (!item.empty()) grid.items.insert(item);
      const auto report = ufc::run_verification(grid);
      emit(g, ufc::render(report, fmt, timing));
      return report.all_pass() ? ok : failed;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "ufc: " << e.what() << "\n";
    return usage;
  } catch (const ufc::error& e) {
    std::cerr << "ufc: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
