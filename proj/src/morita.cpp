#include "tenfold/morita.hpp"

#include "tenfold/errors.hpp"

#include <array>

namespace tenfold {

namespace {

constexpr std::array<const char*, 8> kRealNames{"R", "Cl_{+1}", "Cl_{+2}", "Cl_{+3}",
                                                "H", "Cl_{-3}", "Cl_{-2}", "Cl_{-1}"};
constexpr std::array<const char*, 2> kComplexNames{"C", "CCl_1"};
constexpr std::array<int, 8> kRealDims{1, 2, 4, 8, 4, 8, 4, 2};

} // namespace

int MoritaClass::division_dim() const { return is_real() ? kRealDims[index] : 2 * (index + 1); }

bool MoritaClass::purely_even() const { return index == 0 || (is_real() && index == 4); }

std::string MoritaClass::name() const { return is_real() ? kRealNames[index] : kComplexNames[index]; }

MoritaClass opposite_class(MoritaClass c) { return c.is_real() ? MoritaClass::real(-c.index) : c; }

MoritaClass parse_morita_class(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == kRealNames[i]) return MoritaClass::real(i);
  for (int i = 0; i < 2; ++i)
    if (name == kComplexNames[i]) return MoritaClass::complex(i);
  throw invalid_input("unknown Morita class name '" + name + "'");
}

} // namespace tenfold
