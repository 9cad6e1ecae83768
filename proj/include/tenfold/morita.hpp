#pragma once

#include <string>

namespace tenfold {

enum class FieldType { real, complex };

// One of the ten graded division algebras over R, as a Brauer-Wall class.
// Real index (mod 8): 0 R, 1 Cl_{+1}, 2 Cl_{+2}, 3 Cl_{+3}, 4 H, 5 Cl_{-3},
// 6 Cl_{-2}, 7 Cl_{-1}. Complex index (mod 2): 0 C, 1 Cl_1 over C.
struct MoritaClass {
  FieldType field = FieldType::real;
  int index = 0;

  static MoritaClass real(int i) { return {FieldType::real, ((i % 8) + 8) % 8}; }
  static MoritaClass complex(int i) { return {FieldType::complex, ((i % 2) + 2) % 2}; }

  bool is_real() const { return field == FieldType::real; }
  // Real dimension of the division algebra.
  int division_dim() const;
  bool purely_even() const;
  std::string name() const;

  friend bool operator==(const MoritaClass&, const MoritaClass&) = default;
};

MoritaClass opposite_class(MoritaClass c);

// Parses the names produced by MoritaClass::name().
MoritaClass parse_morita_class(const std::string& name);

} // namespace tenfold
