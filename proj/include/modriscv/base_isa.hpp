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

#include "modriscv/arch_state.hpp"

namespace modriscv {

// RV64I + Zicsr instruction classes. Everything the base core does not
// recognize, including every extension encoding, decodes to Illegal.
enum class BaseOp : uint8_t {
  Illegal,
  Lui, Auipc, Jal, Jalr,
  Beq, Bne, Blt, Bge, Bltu, Bgeu,
  Lb, Lh, Lw, Ld, Lbu, Lhu, Lwu,
  Sb, Sh, Sw, Sd,
  Addi, Slti, Sltiu, Xori, Ori, Andi, Slli, Srli, Srai,
  Addiw, Slliw, Srliw, Sraiw,
  Add, Sub, Sll, Slt, Sltu, Xor, Srl, Sra, Or, And,
  Addw, Subw, Sllw, Srlw, Sraw,
  Fence, FenceI, Ecall, Ebreak,
  Csrrw, Csrrs, Csrrc, Csrrwi, Csrrsi, Csrrci,
};

// One decoded base instruction. Immediates are stored fully sign-extended;
// shift amounts live in imm (6 bits, 5 for the *W forms); CSR instructions
// carry the CSR index in csr and the zimm in rs1 for the immediate forms.
struct BaseAst {
  BaseOp op = BaseOp::Illegal;
  uint8_t rd = 0;
  uint8_t rs1 = 0;
  uint8_t rs2 = 0;
  int64_t imm = 0;
  uint16_t csr = 0;
  uint32_t raw = 0;
};

/// Decodes one 32-bit word. Total and pure: every word maps to exactly one
/// variant, unknown encodings (and all 16-bit encodings, since compressed
/// instructions are unsupported) map to Illegal carrying the raw word.
BaseAst decode_base(uint32_t word);

/// Applies the architectural effect of a non-Illegal base instruction:
/// register and memory updates plus the pc update (pc+4 unless a taken
/// branch or jump redirects it). Returns Retired::Trap after raising the
/// trap for ECALL, EBREAK, access faults and illegal CSR accesses.
Retired execute_base(const BaseAst& ast, ArchState& state);

/// Formats an instruction: lowercase mnemonic, x<n> register operands,
/// comma-space separated, immediates in signed decimal, CSRs by hex index.
/// Illegal prints as `.word 0x<hex8>`. Writes at most cap bytes including
/// the NUL terminator.
void disasm_base(const BaseAst& ast, char* out, size_t cap);

inline std::string disasm_base(const BaseAst& ast) {
  char buf[64];
  disasm_base(ast, buf, sizeof buf);
  return buf;
}

}  // namespace modriscv
