#pragma once

#include "idsem/lcc.hpp"

#include <string>
#include <vector>

namespace idsem {

// A fixture description: an ordered list of codes with fiber sizes.
// The extensional J-structure needs a size-1 code, and a size-0 code
// whenever some fiber has size ≥ 2.
struct CodedFamilySpec {
  std::string name;
  std::vector<std::pair<std::string, int>> codes;
  std::uint64_t skew_seed = 0;

  void validate() const;
  bool supports_extensional() const;
};

// U = the codes, Ũ = Σ of fibers (elements (code k)), p the projection,
// pt a singleton. Verification objects: pt, U, Ũ and skeletal sets 0..3.
UnivCat coded_universe(const CodedFamilySpec& spec);

// Same universe category with the canonical-square chooser permuted by seed.
// Seed 0 returns the normalized structure.
UnivCat skew_structure(const UnivCat& uc, std::uint64_t seed);

// A J-structure on a universe: Eq: (Ũ;p)→U, Ω: Ũ→Ũ, Jp: Fp→I_pEŨ(Ũ).
struct UnivJ {
  Mor eq;
  Mor omega;  // Ω
  Mor jp;
};

// The extensional bundle: Eq is the size-1 code on the diagonal and the
// size-0 code off it; Ω is constant at the size-1 fiber's point; Jp is
// produced through the filler bijection (ω is bijective here).
UnivJ extensional_j(const UnivCat& uc);

// Convenience fixtures used across the test and acceptance suites.
CodedFamilySpec spec_u3();    // codes 0,1,2 with fibers 0,1,2
CodedFamilySpec spec_u1();    // codes a,b with fibers 1,1
CodedFamilySpec spec_u2();    // codes 0,1 with fibers 0,1 (small half of incl)
CodedFamilySpec spec_u12();   // codes 1,2 with fibers 1,2 (surjective p)

}  // namespace idsem
