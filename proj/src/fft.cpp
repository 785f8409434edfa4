// SPDX-License-Identifier: Apache-2.0
#include "tlwavelab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tlwavelab::fft {
namespace {

std::mutex planner_mutex;

struct PlanCache {
  std::map<std::tuple<int, std::int64_t, int>, fftw_plan> plans;
  ~PlanCache() {
    for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
  }
};

fftw_plan get_plan(cplx* data, int dim, std::int64_t n, int sign) {
  static PlanCache cache;
  std::lock_guard lock(planner_mutex);
  const auto key = std::make_tuple(dim, n, sign);
  if (auto it = cache.plans.find(key); it != cache.plans.end()) return it->second;
  int dims[2] = {static_cast<int>(n), static_cast<int>(n)};
  auto* buf = reinterpret_cast<fftw_complex*>(data);
  // FFTW_ESTIMATE leaves the arrays untouched during planning.
  fftw_plan plan = fftw_plan_dft(dim, dims, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan == nullptr) throw std::runtime_error("fft: planner failed");
  cache.plans.emplace(key, plan);
  return plan;
}

void run(std::span<cplx> data, int dim, std::int64_t n, int sign) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("fft: rank must be 1 or 2");
  std::int64_t expected = n;
  for (int d = 1; d < dim; ++d) expected *= n;
  if (static_cast<std::int64_t>(data.size()) != expected) {
    throw std::invalid_argument("fft: buffer size does not match transform shape");
  }
  if (n == 1) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(get_plan(data.data(), dim, n, sign), buf, buf);
}

}  // namespace

void forward(std::span<cplx> data, int dim, std::int64_t n) { run(data, dim, n, FFTW_FORWARD); }
void backward(std::span<cplx> data, int dim, std::int64_t n) { run(data, dim, n, FFTW_BACKWARD); }

}  // namespace tlwavelab::fft
