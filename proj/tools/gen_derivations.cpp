// Regenerates the stored derivations under data/derivations:
//   gen_derivations <data dir>
// rules/<system>/<rule>.json certifies every derived and shortcut rule from base rules alone;
// certificates/<id>.json holds one derivation per standard certificate.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "parabraid/verify.hpp"

namespace fs = std::filesystem;
using namespace parabraid;

namespace {

bool write(const fs::path& file, const std::string& text) {
  fs::create_directories(file.parent_path());
  std::ofstream out(file);
  out << text << "\n";
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_derivations <data dir>\n";
    return 1;
  }
  fs::path root = fs::path(argv[1]) / "derivations";
  int failures = 0;
  ProverBounds base_only;
  base_only.rules = {false, false};

  for (auto [fam, n] : {std::pair{Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::D, 3}, {Family::D, 4}}) {
    RootSystem rs(fam, n);
    Ring ring = rule_ring(rs);
    for (const auto& rule : rule_set(rs)) {
      if (rule.kind == RuleKind::Base) continue;
      auto [lhs, rhs] = rule_words(rule, ring);
      ProofResult pr = prove_equal(rs, ring, lhs, rhs, base_only);
      if (!pr.derivation) {
        std::cerr << system_tag(rs) << " " << rule.name << ": not found\n";
        ++failures;
        continue;
      }
      write(root / "rules" / system_tag(rs) / (file_stem(rule.name) + ".json"),
            derivation_to_json(rs, ring, *pr.derivation));
    }
  }

  for (const auto& c : standard_certificates()) {
    ProverBounds b;
    if (c.base_rules_only) b.rules = {false, false};
    ProofResult pr = prove_equal(c.rs, c.ring, c.lhs, c.rhs, b);
    if (!pr.derivation) {
      std::cerr << c.id << ": not found\n";
      ++failures;
      continue;
    }
    write(root / "certificates" / (file_stem(c.id) + ".json"), derivation_to_json(c.rs, c.ring, *pr.derivation));
  }
  return failures ? 3 : 0;
}
