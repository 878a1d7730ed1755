#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "k3chambers/error.hpp"

namespace k3chambers::testing {

/// Code of the k3chambers::Error thrown by `f`; records a failure if none is.
inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no k3chambers::Error thrown";
  return ErrorCode::InternalInvariant;
}

}  // namespace k3chambers::testing
