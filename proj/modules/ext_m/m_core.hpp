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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace modriscv::ext_m {

// The thirteen RV64M encodings. Everything else is Illegal for this module.
enum class MOp : uint8_t {
  Illegal,
  Mul, Mulh, Mulhsu, Mulhu,
  Div, Divu, Rem, Remu,
  Mulw, Divw, Divuw, Remw, Remuw,
};

struct MAst {
  MOp op = MOp::Illegal;
  uint8_t rd = 0;
  uint8_t rs1 = 0;
  uint8_t rs2 = 0;
  uint32_t raw = 0;
};

/// Pure decoder: claims exactly OP/OP-32 with funct7 = 0000001 and the
/// defined funct3 rows.
MAst m_decode(uint32_t word);

/// Value semantics of one M instruction on 64-bit operands. Division by
/// zero and signed overflow follow the ratified rules (defined results,
/// no traps).
uint64_t m_alu(MOp op, uint64_t a, uint64_t b);

void m_disasm(const MAst& ast, char* out, size_t cap);

inline std::string m_disasm(const MAst& ast) {
  char buf[48];
  m_disasm(ast, buf, sizeof buf);
  return buf;
}

}  // namespace modriscv::ext_m
