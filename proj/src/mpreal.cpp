#include "svdref/mpreal.hpp"

#include <vector>

namespace svdref {

std::string MpReal::to_string(int significant_digits) const {
    if (significant_digits < 2) significant_digits = 2;
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
    return std::string(buf.data());
}

}  // namespace svdref
