// Copyright 2026 The sppt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sppt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace sppt::kernels {

namespace {

const Backend* select_backend() {
  const char* forced = std::getenv("SPPT_KERNELS");
  if (forced && std::strcmp(forced, "scalar") == 0) return &scalar_backend();
#if SPPT_HAVE_AVX2_BACKEND
  if (cpu_supports_avx2()) return &avx2_backend();
#endif
  return &scalar_backend();
}

}  // namespace

const Backend& active() {
  static const Backend* backend = select_backend();
  return *backend;
}

}  // namespace sppt::kernels
