// Copyright 2026 The modriscv Authors.
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

#include "modriscv/arch_state.hpp"

namespace modriscv {

namespace {

struct Fnv64 {
  uint64_t h = 0xcbf29ce484222325ull;
  void add(uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  }
};

}  // namespace

StateDigest ArchState::snapshot() const {
  Fnv64 f;
  f.add(pc_);
  for (uint64_t g : gprs_)
    f.add(g);
  f.add(csrs_.misa);
  f.add(csrs_.mhartid);
  f.add(csrs_.mtvec);
  f.add(csrs_.mepc);
  f.add(csrs_.mcause);
  f.add(csrs_.mtval);
  f.add(minstret_);  // mcycle
  f.add(minstret_);  // minstret
  f.add(minstret_);  // retire counter
  return StateDigest{f.h};
}

}  // namespace modriscv
