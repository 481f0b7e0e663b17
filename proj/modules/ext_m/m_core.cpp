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

#include "m_core.hpp"

#include <cstdio>
#include <limits>

namespace modriscv::ext_m {

MAst m_decode(uint32_t word) {
  MAst ast;
  ast.raw = word;
  uint32_t opcode = word & 0x7f;
  if ((opcode != 0x33 && opcode != 0x3b) || (word >> 25) != 0x01)
    return ast;
  uint32_t funct3 = (word >> 12) & 7;
  if (opcode == 0x33) {
    static constexpr MOp ops[8] = {MOp::Mul, MOp::Mulh, MOp::Mulhsu,
                                   MOp::Mulhu, MOp::Div, MOp::Divu,
                                   MOp::Rem, MOp::Remu};
    ast.op = ops[funct3];
  } else {
    static constexpr MOp ops[8] = {MOp::Mulw, MOp::Illegal, MOp::Illegal,
                                   MOp::Illegal, MOp::Divw, MOp::Divuw,
                                   MOp::Remw, MOp::Remuw};
    ast.op = ops[funct3];
    if (ast.op == MOp::Illegal)
      return ast;
  }
  ast.rd = static_cast<uint8_t>((word >> 7) & 0x1f);
  ast.rs1 = static_cast<uint8_t>((word >> 15) & 0x1f);
  ast.rs2 = static_cast<uint8_t>((word >> 20) & 0x1f);
  return ast;
}

namespace {

constexpr int64_t kMin64 = std::numeric_limits<int64_t>::min();
constexpr int32_t kMin32 = std::numeric_limits<int32_t>::min();

inline uint64_t div_s(int64_t a, int64_t b) {
  if (b == 0)
    return ~0ull;
  if (a == kMin64 && b == -1)
    return static_cast<uint64_t>(kMin64);
  return static_cast<uint64_t>(a / b);
}

inline uint64_t rem_s(int64_t a, int64_t b) {
  if (b == 0)
    return static_cast<uint64_t>(a);
  if (a == kMin64 && b == -1)
    return 0;
  return static_cast<uint64_t>(a % b);
}

inline int64_t sext32(uint32_t v) { return static_cast<int32_t>(v); }

inline uint64_t div_s32(int32_t a, int32_t b) {
  if (b == 0)
    return ~0ull;
  if (a == kMin32 && b == -1)
    return static_cast<uint64_t>(static_cast<int64_t>(kMin32));
  return static_cast<uint64_t>(static_cast<int64_t>(a / b));
}

inline uint64_t rem_s32(int32_t a, int32_t b) {
  if (b == 0)
    return static_cast<uint64_t>(static_cast<int64_t>(a));
  if (a == kMin32 && b == -1)
    return 0;
  return static_cast<uint64_t>(static_cast<int64_t>(a % b));
}

}  // namespace

uint64_t m_alu(MOp op, uint64_t a, uint64_t b) {
  switch (op) {
    case MOp::Mul:
      return a * b;
    case MOp::Mulh:
      return static_cast<uint64_t>(
          (static_cast<__int128>(static_cast<int64_t>(a)) *
           static_cast<__int128>(static_cast<int64_t>(b))) >> 64);
    case MOp::Mulhsu:
      return static_cast<uint64_t>(
          (static_cast<__int128>(static_cast<int64_t>(a)) *
           static_cast<__int128>(b)) >> 64);
    case MOp::Mulhu:
      return static_cast<uint64_t>(
          (static_cast<unsigned __int128>(a) *
           static_cast<unsigned __int128>(b)) >> 64);
    case MOp::Div:
      return div_s(static_cast<int64_t>(a), static_cast<int64_t>(b));
    case MOp::Divu:
      return b == 0 ? ~0ull : a / b;
    case MOp::Rem:
      return rem_s(static_cast<int64_t>(a), static_cast<int64_t>(b));
    case MOp::Remu:
      return b == 0 ? a : a % b;
    case MOp::Mulw:
      return static_cast<uint64_t>(
          sext32(static_cast<uint32_t>(a) * static_cast<uint32_t>(b)));
    case MOp::Divw:
      return div_s32(static_cast<int32_t>(a), static_cast<int32_t>(b));
    case MOp::Divuw: {
      uint32_t ua = static_cast<uint32_t>(a), ub = static_cast<uint32_t>(b);
      return ub == 0 ? ~0ull : static_cast<uint64_t>(sext32(ua / ub));
    }
    case MOp::Remw:
      return rem_s32(static_cast<int32_t>(a), static_cast<int32_t>(b));
    case MOp::Remuw: {
      uint32_t ua = static_cast<uint32_t>(a), ub = static_cast<uint32_t>(b);
      return static_cast<uint64_t>(sext32(ub == 0 ? ua : ua % ub));
    }
    case MOp::Illegal:
      break;
  }
  return 0;
}

namespace {

const char* mnemonic(MOp op) {
  switch (op) {
    case MOp::Mul: return "mul";
    case MOp::Mulh: return "mulh";
    case MOp::Mulhsu: return "mulhsu";
    case MOp::Mulhu: return "mulhu";
    case MOp::Div: return "div";
    case MOp::Divu: return "divu";
    case MOp::Rem: return "rem";
    case MOp::Remu: return "remu";
    case MOp::Mulw: return "mulw";
    case MOp::Divw: return "divw";
    case MOp::Divuw: return "divuw";
    case MOp::Remw: return "remw";
    case MOp::Remuw: return "remuw";
    case MOp::Illegal: break;
  }
  return ".word";
}

}  // namespace

void m_disasm(const MAst& ast, char* out, size_t cap) {
  if (ast.op == MOp::Illegal) {
    std::snprintf(out, cap, ".word 0x%08x", ast.raw);
    return;
  }
  std::snprintf(out, cap, "%s x%u, x%u, x%u", mnemonic(ast.op), ast.rd,
                ast.rs1, ast.rs2);
}

}  // namespace modriscv::ext_m
