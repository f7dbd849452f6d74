#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#include "lef/execution.hpp"

namespace lef {

  //! Runs f(i) for i in [0, n). Under Execution::parallel the loop is an
  //! OpenMP dynamic loop; the exception of the smallest failing index is
  //! rethrown after the loop.
  template <typename F>
  void for_each_index(std::size_t n, Execution exec, F&& f) {
    if (exec == Execution::serial) {
      for (std::size_t i = 0; i < n; ++i) {
        f(i);
      }
      return;
    }
    std::exception_ptr err;
    std::size_t        err_index = n;
    std::mutex         mtx;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < n; ++i) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mtx);
        if (i < err_index) {
          err_index = i;
          err       = std::current_exception();
        }
      }
    }
    if (err) {
      std::rethrow_exception(err);
    }
  }

}  // namespace lef
