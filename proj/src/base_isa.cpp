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

#include "modriscv/base_isa.hpp"

#include <cstdio>

namespace modriscv {

namespace {

inline int64_t sext(uint64_t v, unsigned bits) {
  return static_cast<int64_t>(v << (64 - bits)) >> (64 - bits);
}

inline int64_t imm_i(uint32_t w) { return sext(w >> 20, 12); }

inline int64_t imm_s(uint32_t w) {
  return sext(((w >> 7) & 0x1f) | ((w >> 25) << 5), 12);
}

inline int64_t imm_b(uint32_t w) {
  uint64_t v = ((w >> 8) & 0xf) << 1 | ((w >> 25) & 0x3f) << 5 |
               ((w >> 7) & 1) << 11 | static_cast<uint64_t>(w >> 31) << 12;
  return sext(v, 13);
}

inline int64_t imm_u(uint32_t w) {
  return static_cast<int32_t>(w & 0xfffff000u);
}

inline int64_t imm_j(uint32_t w) {
  uint64_t v = ((w >> 21) & 0x3ff) << 1 | ((w >> 20) & 1) << 11 |
               ((w >> 12) & 0xff) << 12 | static_cast<uint64_t>(w >> 31) << 20;
  return sext(v, 21);
}

inline int64_t sext32(uint64_t v) { return static_cast<int32_t>(v); }

}  // namespace

BaseAst decode_base(uint32_t word) {
  BaseAst ast;
  ast.raw = word;
  if ((word & 3) != 3)
    return ast;  // 16-bit encoding space: compressed is unsupported

  uint32_t opcode = word & 0x7f;
  uint32_t funct3 = (word >> 12) & 7;
  uint32_t funct7 = word >> 25;
  ast.rd = static_cast<uint8_t>((word >> 7) & 0x1f);
  ast.rs1 = static_cast<uint8_t>((word >> 15) & 0x1f);
  ast.rs2 = static_cast<uint8_t>((word >> 20) & 0x1f);

  switch (opcode) {
    case 0x37:
      ast.op = BaseOp::Lui;
      ast.imm = imm_u(word);
      return ast;
    case 0x17:
      ast.op = BaseOp::Auipc;
      ast.imm = imm_u(word);
      return ast;
    case 0x6f:
      ast.op = BaseOp::Jal;
      ast.imm = imm_j(word);
      return ast;
    case 0x67:
      if (funct3 != 0)
        break;
      ast.op = BaseOp::Jalr;
      ast.imm = imm_i(word);
      return ast;
    case 0x63: {
      static constexpr BaseOp ops[8] = {
          BaseOp::Beq,  BaseOp::Bne,  BaseOp::Illegal, BaseOp::Illegal,
          BaseOp::Blt,  BaseOp::Bge,  BaseOp::Bltu,    BaseOp::Bgeu};
      if (ops[funct3] == BaseOp::Illegal)
        break;
      ast.op = ops[funct3];
      ast.imm = imm_b(word);
      return ast;
    }
    case 0x03: {
      static constexpr BaseOp ops[8] = {
          BaseOp::Lb,  BaseOp::Lh,  BaseOp::Lw,  BaseOp::Ld,
          BaseOp::Lbu, BaseOp::Lhu, BaseOp::Lwu, BaseOp::Illegal};
      if (ops[funct3] == BaseOp::Illegal)
        break;
      ast.op = ops[funct3];
      ast.imm = imm_i(word);
      return ast;
    }
    case 0x23: {
      static constexpr BaseOp ops[4] = {BaseOp::Sb, BaseOp::Sh, BaseOp::Sw,
                                        BaseOp::Sd};
      if (funct3 > 3)
        break;
      ast.op = ops[funct3];
      ast.imm = imm_s(word);
      return ast;
    }
    case 0x13:
      switch (funct3) {
        case 0: ast.op = BaseOp::Addi; break;
        case 2: ast.op = BaseOp::Slti; break;
        case 3: ast.op = BaseOp::Sltiu; break;
        case 4: ast.op = BaseOp::Xori; break;
        case 6: ast.op = BaseOp::Ori; break;
        case 7: ast.op = BaseOp::Andi; break;
        case 1:
          if ((word >> 26) != 0)
            return ast;
          ast.op = BaseOp::Slli;
          ast.imm = (word >> 20) & 0x3f;
          return ast;
        case 5:
          if ((word >> 26) == 0x00)
            ast.op = BaseOp::Srli;
          else if ((word >> 26) == 0x10)
            ast.op = BaseOp::Srai;
          else
            return ast;
          ast.imm = (word >> 20) & 0x3f;
          return ast;
      }
      ast.imm = imm_i(word);
      return ast;
    case 0x1b:
      switch (funct3) {
        case 0:
          ast.op = BaseOp::Addiw;
          ast.imm = imm_i(word);
          return ast;
        case 1:
          if (funct7 != 0x00)
            return ast;
          ast.op = BaseOp::Slliw;
          ast.imm = ast.rs2;  // 5-bit shamt
          return ast;
        case 5:
          if (funct7 == 0x00)
            ast.op = BaseOp::Srliw;
          else if (funct7 == 0x20)
            ast.op = BaseOp::Sraiw;
          else
            return ast;
          ast.imm = ast.rs2;
          return ast;
      }
      break;
    case 0x33:
      if (funct7 == 0x00) {
        static constexpr BaseOp ops[8] = {
            BaseOp::Add, BaseOp::Sll, BaseOp::Slt, BaseOp::Sltu,
            BaseOp::Xor, BaseOp::Srl, BaseOp::Or,  BaseOp::And};
        ast.op = ops[funct3];
        return ast;
      }
      if (funct7 == 0x20) {
        if (funct3 == 0)
          ast.op = BaseOp::Sub;
        else if (funct3 == 5)
          ast.op = BaseOp::Sra;
        else
          return ast;
        return ast;
      }
      break;  // funct7 0000001 is the M space: not ours
    case 0x3b:
      if (funct7 == 0x00) {
        if (funct3 == 0)
          ast.op = BaseOp::Addw;
        else if (funct3 == 1)
          ast.op = BaseOp::Sllw;
        else if (funct3 == 5)
          ast.op = BaseOp::Srlw;
        else
          return ast;
        return ast;
      }
      if (funct7 == 0x20) {
        if (funct3 == 0)
          ast.op = BaseOp::Subw;
        else if (funct3 == 5)
          ast.op = BaseOp::Sraw;
        else
          return ast;
        return ast;
      }
      break;
    case 0x0f:
      if (funct3 == 0)
        ast.op = BaseOp::Fence;
      else if (funct3 == 1)
        ast.op = BaseOp::FenceI;
      else
        return ast;
      return ast;
    case 0x73:
      if (funct3 == 0) {
        if (word == 0x00000073)
          ast.op = BaseOp::Ecall;
        else if (word == 0x00100073)
          ast.op = BaseOp::Ebreak;
        return ast;
      }
      {
        static constexpr BaseOp ops[8] = {
            BaseOp::Illegal, BaseOp::Csrrw,  BaseOp::Csrrs,  BaseOp::Csrrc,
            BaseOp::Illegal, BaseOp::Csrrwi, BaseOp::Csrrsi, BaseOp::Csrrci};
        if (ops[funct3] == BaseOp::Illegal)
          return ast;
        ast.op = ops[funct3];
        ast.csr = static_cast<uint16_t>(word >> 20);
        return ast;
      }
    default:
      break;
  }
  return ast;
}

namespace {

Retired execute_csr(const BaseAst& ast, ArchState& s) {
  uint64_t old = 0;
  if (!s.csr_read(ast.csr, old)) {
    s.raise_trap({TrapCause::IllegalInstruction, ast.raw});
    return Retired::Trap;
  }
  bool imm_form = ast.op == BaseOp::Csrrwi || ast.op == BaseOp::Csrrsi ||
                  ast.op == BaseOp::Csrrci;
  uint64_t src = imm_form ? ast.rs1 : s.gpr_read(ast.rs1);
  bool write = true;
  uint64_t nv = src;
  switch (ast.op) {
    case BaseOp::Csrrw:
    case BaseOp::Csrrwi:
      break;
    case BaseOp::Csrrs:
    case BaseOp::Csrrsi:
      nv = old | src;
      write = ast.rs1 != 0;
      break;
    default:
      nv = old & ~src;
      write = ast.rs1 != 0;
      break;
  }
  if (write && s.csr_write(ast.csr, nv) != CsrWrite::Ok) {
    s.raise_trap({TrapCause::IllegalInstruction, ast.raw});
    return Retired::Trap;
  }
  s.gpr_write(ast.rd, old);
  s.set_pc(s.pc() + 4);
  return Retired::Success;
}

}  // namespace

Retired execute_base(const BaseAst& ast, ArchState& s) {
  assert(ast.op != BaseOp::Illegal);
  const uint64_t pc = s.pc();
  const uint64_t a = s.gpr_read(ast.rs1);
  const uint64_t b = s.gpr_read(ast.rs2);
  uint64_t rd = 0;
  bool writeback = true;

  switch (ast.op) {
    case BaseOp::Lui: rd = static_cast<uint64_t>(ast.imm); break;
    case BaseOp::Auipc: rd = pc + static_cast<uint64_t>(ast.imm); break;

    case BaseOp::Jal:
      s.gpr_write(ast.rd, pc + 4);
      s.set_pc(pc + static_cast<uint64_t>(ast.imm));
      return Retired::Success;
    case BaseOp::Jalr: {
      uint64_t target = (a + static_cast<uint64_t>(ast.imm)) & ~1ull;
      s.gpr_write(ast.rd, pc + 4);
      s.set_pc(target);
      return Retired::Success;
    }

    case BaseOp::Beq:
    case BaseOp::Bne:
    case BaseOp::Blt:
    case BaseOp::Bge:
    case BaseOp::Bltu:
    case BaseOp::Bgeu: {
      bool taken = false;
      switch (ast.op) {
        case BaseOp::Beq: taken = a == b; break;
        case BaseOp::Bne: taken = a != b; break;
        case BaseOp::Blt: taken = static_cast<int64_t>(a) < static_cast<int64_t>(b); break;
        case BaseOp::Bge: taken = static_cast<int64_t>(a) >= static_cast<int64_t>(b); break;
        case BaseOp::Bltu: taken = a < b; break;
        default: taken = a >= b; break;
      }
      s.set_pc(taken ? pc + static_cast<uint64_t>(ast.imm) : pc + 4);
      return Retired::Success;
    }

    case BaseOp::Lb:
    case BaseOp::Lh:
    case BaseOp::Lw:
    case BaseOp::Ld:
    case BaseOp::Lbu:
    case BaseOp::Lhu:
    case BaseOp::Lwu: {
      static constexpr uint32_t sizes[7] = {1, 2, 4, 8, 1, 2, 4};
      uint32_t size = sizes[static_cast<int>(ast.op) - static_cast<int>(BaseOp::Lb)];
      uint64_t v = 0;
      if (!s.mem_load(a + static_cast<uint64_t>(ast.imm), size, v))
        return Retired::Trap;
      switch (ast.op) {
        case BaseOp::Lb: rd = static_cast<uint64_t>(static_cast<int8_t>(v)); break;
        case BaseOp::Lh: rd = static_cast<uint64_t>(static_cast<int16_t>(v)); break;
        case BaseOp::Lw: rd = static_cast<uint64_t>(static_cast<int32_t>(v)); break;
        default: rd = v; break;
      }
      break;
    }

    case BaseOp::Sb:
    case BaseOp::Sh:
    case BaseOp::Sw:
    case BaseOp::Sd: {
      static constexpr uint32_t sizes[4] = {1, 2, 4, 8};
      uint32_t size = sizes[static_cast<int>(ast.op) - static_cast<int>(BaseOp::Sb)];
      if (!s.mem_store(a + static_cast<uint64_t>(ast.imm), size, b))
        return Retired::Trap;
      writeback = false;
      break;
    }

    case BaseOp::Addi: rd = a + static_cast<uint64_t>(ast.imm); break;
    case BaseOp::Slti: rd = static_cast<int64_t>(a) < ast.imm ? 1 : 0; break;
    case BaseOp::Sltiu: rd = a < static_cast<uint64_t>(ast.imm) ? 1 : 0; break;
    case BaseOp::Xori: rd = a ^ static_cast<uint64_t>(ast.imm); break;
    case BaseOp::Ori: rd = a | static_cast<uint64_t>(ast.imm); break;
    case BaseOp::Andi: rd = a & static_cast<uint64_t>(ast.imm); break;
    case BaseOp::Slli: rd = a << ast.imm; break;
    case BaseOp::Srli: rd = a >> ast.imm; break;
    case BaseOp::Srai: rd = static_cast<uint64_t>(static_cast<int64_t>(a) >> ast.imm); break;

    case BaseOp::Addiw: rd = static_cast<uint64_t>(sext32(a + static_cast<uint64_t>(ast.imm))); break;
    case BaseOp::Slliw: rd = static_cast<uint64_t>(sext32(static_cast<uint32_t>(a) << ast.imm)); break;
    case BaseOp::Srliw: rd = static_cast<uint64_t>(sext32(static_cast<uint32_t>(a) >> ast.imm)); break;
    case BaseOp::Sraiw: rd = static_cast<uint64_t>(static_cast<int64_t>(static_cast<int32_t>(a) >> ast.imm)); break;

    case BaseOp::Add: rd = a + b; break;
    case BaseOp::Sub: rd = a - b; break;
    case BaseOp::Sll: rd = a << (b & 63); break;
    case BaseOp::Slt: rd = static_cast<int64_t>(a) < static_cast<int64_t>(b) ? 1 : 0; break;
    case BaseOp::Sltu: rd = a < b ? 1 : 0; break;
    case BaseOp::Xor: rd = a ^ b; break;
    case BaseOp::Srl: rd = a >> (b & 63); break;
    case BaseOp::Sra: rd = static_cast<uint64_t>(static_cast<int64_t>(a) >> (b & 63)); break;
    case BaseOp::Or: rd = a | b; break;
    case BaseOp::And: rd = a & b; break;

    case BaseOp::Addw: rd = static_cast<uint64_t>(sext32(a + b)); break;
    case BaseOp::Subw: rd = static_cast<uint64_t>(sext32(a - b)); break;
    case BaseOp::Sllw: rd = static_cast<uint64_t>(sext32(static_cast<uint32_t>(a) << (b & 31))); break;
    case BaseOp::Srlw: rd = static_cast<uint64_t>(sext32(static_cast<uint32_t>(a) >> (b & 31))); break;
    case BaseOp::Sraw: rd = static_cast<uint64_t>(static_cast<int64_t>(static_cast<int32_t>(a) >> (b & 31))); break;

    case BaseOp::Fence:
    case BaseOp::FenceI:
      writeback = false;  // single hart, no caches: retire as no-op
      break;

    case BaseOp::Ecall:
      s.raise_trap({TrapCause::EnvCallFromM, 0});
      return Retired::Trap;
    case BaseOp::Ebreak:
      s.raise_trap({TrapCause::Breakpoint, pc});
      return Retired::Trap;

    case BaseOp::Csrrw:
    case BaseOp::Csrrs:
    case BaseOp::Csrrc:
    case BaseOp::Csrrwi:
    case BaseOp::Csrrsi:
    case BaseOp::Csrrci:
      return execute_csr(ast, s);

    case BaseOp::Illegal:
      s.raise_trap({TrapCause::IllegalInstruction, ast.raw});
      return Retired::Trap;
  }

  if (writeback)
    s.gpr_write(ast.rd, rd);
  s.set_pc(pc + 4);
  return Retired::Success;
}

namespace {

const char* mnemonic(BaseOp op) {
  switch (op) {
    case BaseOp::Illegal: return ".word";
    case BaseOp::Lui: return "lui";
    case BaseOp::Auipc: return "auipc";
    case BaseOp::Jal: return "jal";
    case BaseOp::Jalr: return "jalr";
    case BaseOp::Beq: return "beq";
    case BaseOp::Bne: return "bne";
    case BaseOp::Blt: return "blt";
    case BaseOp::Bge: return "bge";
    case BaseOp::Bltu: return "bltu";
    case BaseOp::Bgeu: return "bgeu";
    case BaseOp::Lb: return "lb";
    case BaseOp::Lh: return "lh";
    case BaseOp::Lw: return "lw";
    case BaseOp::Ld: return "ld";
    case BaseOp::Lbu: return "lbu";
    case BaseOp::Lhu: return "lhu";
    case BaseOp::Lwu: return "lwu";
    case BaseOp::Sb: return "sb";
    case BaseOp::Sh: return "sh";
    case BaseOp::Sw: return "sw";
    case BaseOp::Sd: return "sd";
    case BaseOp::Addi: return "addi";
    case BaseOp::Slti: return "slti";
    case BaseOp::Sltiu: return "sltiu";
    case BaseOp::Xori: return "xori";
    case BaseOp::Ori: return "ori";
    case BaseOp::Andi: return "andi";
    case BaseOp::Slli: return "slli";
    case BaseOp::Srli: return "srli";
    case BaseOp::Srai: return "srai";
    case BaseOp::Addiw: return "addiw";
    case BaseOp::Slliw: return "slliw";
    case BaseOp::Srliw: return "srliw";
    case BaseOp::Sraiw: return "sraiw";
    case BaseOp::Add: return "add";
    case BaseOp::Sub: return "sub";
    case BaseOp::Sll: return "sll";
    case BaseOp::Slt: return "slt";
    case BaseOp::Sltu: return "sltu";
    case BaseOp::Xor: return "xor";
    case BaseOp::Srl: return "srl";
    case BaseOp::Sra: return "sra";
    case BaseOp::Or: return "or";
    case BaseOp::And: return "and";
    case BaseOp::Addw: return "addw";
    case BaseOp::Subw: return "subw";
    case BaseOp::Sllw: return "sllw";
    case BaseOp::Srlw: return "srlw";
    case BaseOp::Sraw: return "sraw";
    case BaseOp::Fence: return "fence";
    case BaseOp::FenceI: return "fence.i";
    case BaseOp::Ecall: return "ecall";
    case BaseOp::Ebreak: return "ebreak";
    case BaseOp::Csrrw: return "csrrw";
    case BaseOp::Csrrs: return "csrrs";
    case BaseOp::Csrrc: return "csrrc";
    case BaseOp::Csrrwi: return "csrrwi";
    case BaseOp::Csrrsi: return "csrrsi";
    case BaseOp::Csrrci: return "csrrci";
  }
  return "?";
}

}  // namespace

void disasm_base(const BaseAst& ast, char* out, size_t cap) {
  const char* m = mnemonic(ast.op);
  long long imm = ast.imm;
  switch (ast.op) {
    case BaseOp::Illegal:
      std::snprintf(out, cap, ".word 0x%08x", ast.raw);
      return;
    case BaseOp::Lui:
    case BaseOp::Auipc:
      // Print the 20-bit immediate field, not the shifted value.
      std::snprintf(out, cap, "%s x%u, %lld", m, ast.rd, imm >> 12);
      return;
    case BaseOp::Jal:
      std::snprintf(out, cap, "%s x%u, %lld", m, ast.rd, imm);
      return;
    case BaseOp::Jalr:
      std::snprintf(out, cap, "%s x%u, x%u, %lld", m, ast.rd, ast.rs1, imm);
      return;
    case BaseOp::Beq:
    case BaseOp::Bne:
    case BaseOp::Blt:
    case BaseOp::Bge:
    case BaseOp::Bltu:
    case BaseOp::Bgeu:
      std::snprintf(out, cap, "%s x%u, x%u, %lld", m, ast.rs1, ast.rs2, imm);
      return;
    case BaseOp::Lb:
    case BaseOp::Lh:
    case BaseOp::Lw:
    case BaseOp::Ld:
    case BaseOp::Lbu:
    case BaseOp::Lhu:
    case BaseOp::Lwu:
      std::snprintf(out, cap, "%s x%u, x%u, %lld", m, ast.rd, ast.rs1, imm);
      return;
    case BaseOp::Sb:
    case BaseOp::Sh:
    case BaseOp::Sw:
    case BaseOp::Sd:
      std::snprintf(out, cap, "%s x%u, x%u, %lld", m, ast.rs2, ast.rs1, imm);
      return;
    case BaseOp::Addi:
    case BaseOp::Slti:
    case BaseOp::Sltiu:
    case BaseOp::Xori:
    case BaseOp::Ori:
    case BaseOp::Andi:
    case BaseOp::Slli:
    case BaseOp::Srli:
    case BaseOp::Srai:
    case BaseOp::Addiw:
    case BaseOp::Slliw:
    case BaseOp::Srliw:
    case BaseOp::Sraiw:
      std::snprintf(out, cap, "%s x%u, x%u, %lld", m, ast.rd, ast.rs1, imm);
      return;
    case BaseOp::Fence:
    case BaseOp::FenceI:
    case BaseOp::Ecall:
    case BaseOp::Ebreak:
      std::snprintf(out, cap, "%s", m);
      return;
    case BaseOp::Csrrw:
    case BaseOp::Csrrs:
    case BaseOp::Csrrc:
      std::snprintf(out, cap, "%s x%u, 0x%03x, x%u", m, ast.rd, ast.csr, ast.rs1);
      return;
    case BaseOp::Csrrwi:
    case BaseOp::Csrrsi:
    case BaseOp::Csrrci:
      std::snprintf(out, cap, "%s x%u, 0x%03x, %u", m, ast.rd, ast.csr, ast.rs1);
      return;
    default:
      std::snprintf(out, cap, "%s x%u, x%u, x%u", m, ast.rd, ast.rs1, ast.rs2);
      return;
  }
}

}  // namespace modriscv
