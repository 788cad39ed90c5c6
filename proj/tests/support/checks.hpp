#pragma once

#include "doctest.h"
#include "gsp/error.hpp"

#define CHECK_GSP_ERROR(expr, expected)                                   \
  do {                                                                    \
    try {                                                                 \
      (void)(expr);                                                       \
      FAIL_CHECK("expected " << gsp::to_string(expected) << ": " #expr);  \
    } catch (const gsp::Error& gsp_err_) {                                \
      CHECK_MESSAGE(gsp_err_.code() == (expected), gsp_err_.what());      \
    }                                                                     \
  } while (false)
