#pragma once

#include <gtest/gtest.h>

#include <lightcone/error.hpp>

// EXPECT that stmt throws lightcone::Error carrying the given code
#define EXPECT_CODE(stmt, c)                                                        \
  do {                                                                              \
    try {                                                                           \
      stmt;                                                                         \
      ADD_FAILURE() << #stmt " did not throw";                                      \
    } catch (const lightcone::Error& e_) {                                          \
      EXPECT_EQ(e_.code(), c) << e_.what();                                         \
    }                                                                               \
  } while (0)
