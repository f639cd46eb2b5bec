#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <ostream>

#include "brieskorn/arith.hpp"
#include "brieskorn/error.hpp"

namespace testing::internal {

// GoogleTest has no printer for __int128.
template <>
class UniversalPrinter<__int128> {
public:
    static void Print(const __int128& v, std::ostream* os) { *os << brieskorn::to_string(v); }
};

}  // namespace testing::internal

inline brieskorn::Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const brieskorn::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return brieskorn::Errc::integrity;
}
