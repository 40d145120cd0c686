#pragma once

#include <doctest.h>

#include <functional>

#include "tri/error.hpp"

/// Kind of the library error raised by `f`; fails the test when none is.
inline tri::ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const tri::Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return tri::ErrorKind::InvalidArgument;
}
