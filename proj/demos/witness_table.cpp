// Prints the state complexity of reversal, star and product for the witness
// family, next to the upper bounds.

#include <cstdio>
#include <string>

#include "ufc/ufc.hpp"

int main() {
  using namespace ufc;
  std::printf("%3s %8s %8s %8s %10s\n", "n", "reverse", "star", "atoms", "product");
  for (std::size_t n = 3; n <= 8; ++n) {
    const Dfa abc = make_witness(n, "a,b,c");
    const auto rev = reverse(abc);
    const auto st = star(make_witness(n, "a,b"));
    const auto prod = concat(abc, abc, AlphabetMode::restricted);
    // The transition monoid has n^n elements; past n = 6 it is over the default cap.
    const std::string atoms = n <= 6 ? std::to_string(atom_count(abc)) : "-";
    std::printf("%3zu %4zu/%-3llu %4zu/%-3llu %8s %5zu/%-4llu\n", n, rev.complexity(),
                static_cast<unsigned long long>(rev.upper_bound), st.complexity(),
                static_cast<unsigned long long>(st.upper_bound), atoms.c_str(), prod.complexity(),
                static_cast<unsigned long long>(prod.upper_bound));
  }
}
