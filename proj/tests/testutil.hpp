#pragma once

#include <iostream>
#include <sstream>

// Minimal check helpers: count failures, print context, exit nonzero from
// main via test_failures.

inline int test_failures = 0;

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) {                                                       \
            ++test_failures;                                                 \
            std::cerr << __FILE__ << ":" << __LINE__ << ": CHECK failed: "   \
                      << #cond << "\n";                                      \
        }                                                                    \
    } while (0)

#define CHECK_EQ(a, b)                                                       \
    do {                                                                     \
        auto va_ = (a);                                                      \
        auto vb_ = (b);                                                      \
        if (!(va_ == vb_)) {                                                 \
            ++test_failures;                                                 \
            std::cerr << __FILE__ << ":" << __LINE__ << ": CHECK_EQ failed: "\
                      << #a << " = " << va_ << " vs " << #b << " = " << vb_  \
                      << "\n";                                               \
        }                                                                    \
    } while (0)

#define CHECK_THROWS(expr, exception_type)                                   \
    do {                                                                     \
        bool caught_ = false;                                                \
        try {                                                                \
            (void)(expr);                                                    \
        } catch (const exception_type&) {                                    \
            caught_ = true;                                                  \
        } catch (...) {                                                      \
        }                                                                    \
        if (!caught_) {                                                      \
            ++test_failures;                                                 \
            std::cerr << __FILE__ << ":" << __LINE__                         \
                      << ": expected " #exception_type " from " #expr "\n";  \
        }                                                                    \
    } while (0)

inline int test_summary(const char* name) {
    if (test_failures) {
        std::cerr << name << ": " << test_failures << " failure(s)\n";
        return 1;
    }
    std::cout << name << ": ok\n";
    return 0;
}
