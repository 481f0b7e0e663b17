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

namespace modriscv::ext_zbb {

// RV64 Zbb subset handled by this module. The *W rotate/count forms and
// the Zba/Zbs/Zbc neighbours are intentionally not claimed.
enum class ZbbOp : uint8_t {
  Illegal,
  Andn, Orn, Xnor,
  Clz, Ctz, Cpop,
  Min, Max, Minu, Maxu,
  SextB, SextH, ZextH,
  Rol, Ror, Rori,
  Rev8, OrcB,
};

struct ZbbAst {
  ZbbOp op = ZbbOp::Illegal;
  uint8_t rd = 0;
  uint8_t rs1 = 0;
  uint8_t rs2 = 0;
  uint8_t shamt = 0;
  uint32_t raw = 0;
};

/// Pure decoder for the listed RV64 encodings only.
ZbbAst zbb_decode(uint32_t word);

/// Value semantics of one Zbb instruction. b carries the rs2 value for the
/// two-register forms and the shift amount for RORI; unary forms ignore it.
uint64_t zbb_alu(ZbbOp op, uint64_t a, uint64_t b);

void zbb_disasm(const ZbbAst& ast, char* out, size_t cap);

inline std::string zbb_disasm(const ZbbAst& ast) {
  char buf[48];
  zbb_disasm(ast, buf, sizeof buf);
  return buf;
}

}  // namespace modriscv::ext_zbb
