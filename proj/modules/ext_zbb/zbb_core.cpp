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

#include "zbb_core.hpp"

#include <bit>
#include <cstdio>

namespace modriscv::ext_zbb {

ZbbAst zbb_decode(uint32_t word) {
  ZbbAst ast;
  ast.raw = word;
  uint32_t opcode = word & 0x7f;
  uint32_t funct3 = (word >> 12) & 7;
  uint32_t funct7 = word >> 25;
  uint8_t rd = static_cast<uint8_t>((word >> 7) & 0x1f);
  uint8_t rs1 = static_cast<uint8_t>((word >> 15) & 0x1f);
  uint8_t rs2 = static_cast<uint8_t>((word >> 20) & 0x1f);

  ZbbOp op = ZbbOp::Illegal;
  uint8_t shamt = 0;

  switch (opcode) {
    case 0x33:  // OP
      if (funct7 == 0x20) {
        if (funct3 == 7) op = ZbbOp::Andn;
        else if (funct3 == 6) op = ZbbOp::Orn;
        else if (funct3 == 4) op = ZbbOp::Xnor;
      } else if (funct7 == 0x05) {
        if (funct3 == 4) op = ZbbOp::Min;
        else if (funct3 == 5) op = ZbbOp::Minu;
        else if (funct3 == 6) op = ZbbOp::Max;
        else if (funct3 == 7) op = ZbbOp::Maxu;
      } else if (funct7 == 0x30) {
        if (funct3 == 1) op = ZbbOp::Rol;
        else if (funct3 == 5) op = ZbbOp::Ror;
      }
      break;
    case 0x13: {  // OP-IMM
      uint32_t imm12 = word >> 20;
      if (funct3 == 1 && funct7 == 0x30) {
        switch (rs2) {
          case 0: op = ZbbOp::Clz; break;
          case 1: op = ZbbOp::Ctz; break;
          case 2: op = ZbbOp::Cpop; break;
          case 4: op = ZbbOp::SextB; break;
          case 5: op = ZbbOp::SextH; break;
          default: break;
        }
        rs2 = 0;
      } else if (funct3 == 5) {
        if ((word >> 26) == 0x18) {  // funct6 = 011000
          op = ZbbOp::Rori;
          shamt = static_cast<uint8_t>((word >> 20) & 0x3f);
          rs2 = 0;
        } else if (imm12 == 0x6b8) {
          op = ZbbOp::Rev8;
          rs2 = 0;
        } else if (imm12 == 0x287) {
          op = ZbbOp::OrcB;
          rs2 = 0;
        }
      }
      break;
    }
    case 0x3b:  // OP-32: zext.h requires an all-zero rs2 field
      if (funct7 == 0x04 && funct3 == 4 && rs2 == 0)
        op = ZbbOp::ZextH;
      break;
    default:
      break;
  }

  if (op == ZbbOp::Illegal)
    return ast;
  ast.op = op;
  ast.rd = rd;
  ast.rs1 = rs1;
  ast.rs2 = rs2;
  ast.shamt = shamt;
  return ast;
}

uint64_t zbb_alu(ZbbOp op, uint64_t a, uint64_t b) {
  switch (op) {
    case ZbbOp::Andn: return a & ~b;
    case ZbbOp::Orn: return a | ~b;
    case ZbbOp::Xnor: return ~(a ^ b);
    case ZbbOp::Clz: return std::countl_zero(a);
    case ZbbOp::Ctz: return std::countr_zero(a);
    case ZbbOp::Cpop: return std::popcount(a);
    case ZbbOp::Min:
      return static_cast<int64_t>(a) < static_cast<int64_t>(b) ? a : b;
    case ZbbOp::Max:
      return static_cast<int64_t>(a) > static_cast<int64_t>(b) ? a : b;
    case ZbbOp::Minu: return a < b ? a : b;
    case ZbbOp::Maxu: return a > b ? a : b;
    case ZbbOp::SextB:
      return static_cast<uint64_t>(static_cast<int8_t>(a));
    case ZbbOp::SextH:
      return static_cast<uint64_t>(static_cast<int16_t>(a));
    case ZbbOp::ZextH: return a & 0xffff;
    case ZbbOp::Rol: return std::rotl(a, static_cast<int>(b & 63));
    case ZbbOp::Ror:
    case ZbbOp::Rori: return std::rotr(a, static_cast<int>(b & 63));
    case ZbbOp::Rev8: return __builtin_bswap64(a);
    case ZbbOp::OrcB: {
      uint64_t r = 0;
      for (int i = 0; i < 64; i += 8)
        if ((a >> i) & 0xff)
          r |= 0xffull << i;
      return r;
    }
    case ZbbOp::Illegal: break;
  }
  return 0;
}

namespace {

const char* mnemonic(ZbbOp op) {
  switch (op) {
    case ZbbOp::Andn: return "andn";
    case ZbbOp::Orn: return "orn";
    case ZbbOp::Xnor: return "xnor";
    case ZbbOp::Clz: return "clz";
    case ZbbOp::Ctz: return "ctz";
    case ZbbOp::Cpop: return "cpop";
    case ZbbOp::Min: return "min";
    case ZbbOp::Max: return "max";
    case ZbbOp::Minu: return "minu";
    case ZbbOp::Maxu: return "maxu";
    case ZbbOp::SextB: return "sext.b";
    case ZbbOp::SextH: return "sext.h";
    case ZbbOp::ZextH: return "zext.h";
    case ZbbOp::Rol: return "rol";
    case ZbbOp::Ror: return "ror";
    case ZbbOp::Rori: return "rori";
    case ZbbOp::Rev8: return "rev8";
    case ZbbOp::OrcB: return "orc.b";
    case ZbbOp::Illegal: break;
  }
  return ".word";
}

}  // namespace

void zbb_disasm(const ZbbAst& ast, char* out, size_t cap) {
  switch (ast.op) {
    case ZbbOp::Illegal:
      std::snprintf(out, cap, ".word 0x%08x", ast.raw);
      return;
    case ZbbOp::Clz:
    case ZbbOp::Ctz:
    case ZbbOp::Cpop:
    case ZbbOp::SextB:
    case ZbbOp::SextH:
    case ZbbOp::ZextH:
    case ZbbOp::Rev8:
    case ZbbOp::OrcB:
      std::snprintf(out, cap, "%s x%u, x%u", mnemonic(ast.op), ast.rd, ast.rs1);
      return;
    case ZbbOp::Rori:
      std::snprintf(out, cap, "rori x%u, x%u, %u", ast.rd, ast.rs1, ast.shamt);
      return;
    default:
      std::snprintf(out, cap, "%s x%u, x%u, x%u", mnemonic(ast.op), ast.rd,
                    ast.rs1, ast.rs2);
      return;
  }
}

}  // namespace modriscv::ext_zbb
