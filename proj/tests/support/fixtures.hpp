#pragma once

#include <ostream>
#include <string_view>

#include "hoc/dsl.hpp"

namespace hoc {

// Readable gtest failure messages.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << dsl::print(p); }
inline void PrintTo(const Form& f, std::ostream* os) { *os << dsl::print(f); }
inline void PrintTo(const MultiVec& v, std::ostream* os) { *os << dsl::print(v); }
inline void PrintTo(const Section& s, std::ostream* os) { *os << dsl::print(s); }

namespace test {

inline Poly P(std::string_view text, int m) { return dsl::parse_scalar(text, m); }
inline Form F(std::string_view text, int m, int k) { return dsl::parse_form(text, m, k); }
inline MultiVec V(std::string_view text, int m, int k = 1) { return dsl::parse_multivec(text, m, k); }
inline Section S(std::string_view text, const Context& ctx) { return dsl::parse_section(text, ctx); }

}  // namespace test
}  // namespace hoc
