// Regenerates src/d_sign_table.cpp: `calibrate_d > src/d_sign_table.cpp`.
// With --report, prints the constraint summary instead.
#include <cstring>
#include <iostream>

#include "parabraid/steinberg.hpp"

int main(int argc, char** argv) {
  using namespace parabraid;
  bool report = argc > 1 && std::strcmp(argv[1], "--report") == 0;
  if (report) {
    for (int n = 3; n <= 6; ++n) {
      auto rep = calibrate_d(n);
      std::cout << "D" << n << ":";
      for (const char* k : {"lift-involution", "lift-form", "lift-braid", "st2-simple", "st2-reference", "compat-rank2", "compat", "st2"})
        std::cout << " " << k << " " << rep.count(k, true) << "/" << rep.count(k, true) + rep.count(k, false);
      std::cout << "\n";
      for (const auto& c : rep.constraints)
        if (!c.satisfied) std::cout << "  unsatisfied " << c.kind << ": " << c.description << "\n";
    }
    return 0;
  }
  std::cout << "// Generated by tools/calibrate_d. Do not edit by hand.\n"
               "#include \"parabraid/steinberg.hpp\"\n\n"
               "namespace parabraid {\n\n"
               "const std::vector<DSignTable>& committed_d_sign_tables() {\n"
               "  static const std::vector<DSignTable> tables = {\n";
  for (int n = 3; n <= 6; ++n) {
    auto t = calibrate_d(n).table;
    std::cout << "      {" << n << ", \"" << t.root_signs << "\",\n       \"" << t.twists << "\"},\n";
  }
  std::cout << "  };\n  return tables;\n}\n\n}  // namespace parabraid\n";
  return 0;
}
