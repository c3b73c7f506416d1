// Builds the expression for L_n, removes its unions and checks the result
// against the witness automaton.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ufc/ufc.hpp"

int main(int argc, char** argv) {
  using namespace ufc;
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4;
  try {
    const Regex with_unions = witness_expression(n);
    const Regex r = eliminate_unions(with_unions);
    std::printf("L_%zu        = %s\n", n, render(with_unions).c_str());
    std::printf("union-free = %s\n", render(r).c_str());
    const Dfa d = minimize(determinize(regex_to_nfa(r)));
    const auto diff = equivalent(d, make_witness(n, "a,b,c,d"));
    if (diff) {
      std::printf("differs on \"%s\"\n", diff->c_str());
      return 1;
    }
    std::printf("%zu states, same language as D_%zu(a,b,c,d)\n", d.state_count(), n);
  } catch (const error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
}
