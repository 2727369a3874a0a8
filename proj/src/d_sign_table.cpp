// Generated by tools/calibrate_d. Do not edit by hand.
#include "parabraid/steinberg.hpp"

namespace parabraid {

const std::vector<DSignTable>& committed_d_sign_tables() {
  static const std::vector<DSignTable> tables = {
      {3, "111001111000",
       "000000000000000000"},
      {4, "111110100100111110100000",
       "00000000000000000000000000000000"},
      {5, "1111111011010100000011111110110100000000",
       "00000000000000000000000000000000000000000000000000"},
      {6, "111111111011101101100000000000111111111011101100100000000000",
       "000000000000000000000000000000000000000000000000000000000000000000000000"},
  };
  return tables;
}

}  // namespace parabraid
