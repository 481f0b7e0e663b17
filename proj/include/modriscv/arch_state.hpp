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

#include <array>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

namespace modriscv {

enum class TrapCause : uint32_t {
  IllegalInstruction = 2,
  Breakpoint = 3,
  LoadAccessFault = 5,
  StoreAccessFault = 7,
  EnvCallFromM = 11,
};

struct Trap {
  TrapCause cause;
  uint64_t tval = 0;
};

enum class Retired : int32_t {
  Success = 0,
  Trap = 1,
};

// CSR addresses implemented by the machine-mode core.
namespace csr {
inline constexpr uint16_t kMisa = 0x301;
inline constexpr uint16_t kMtvec = 0x305;
inline constexpr uint16_t kMepc = 0x341;
inline constexpr uint16_t kMcause = 0x342;
inline constexpr uint16_t kMtval = 0x343;
inline constexpr uint16_t kMcycle = 0xB00;
inline constexpr uint16_t kMinstret = 0xB02;
inline constexpr uint16_t kMhartid = 0xF14;

// CSR addresses with bits [11:10] set are read-only by encoding.
inline constexpr bool is_read_only(uint16_t addr) { return (addr >> 10) == 3; }
}  // namespace csr

struct CsrFile {
  uint64_t misa = 0;
  uint64_t mhartid = 0;
  uint64_t mtvec = 0;
  uint64_t mepc = 0;
  uint64_t mcause = 0;
  uint64_t mtval = 0;
  // mcycle and minstret read through the hart's retire counter.
};

enum class CsrWrite { Ok, Unimplemented, ReadOnly };

// Deterministic digest of the register-visible machine state (pc, GPRs,
// CSRs, minstret). Memory is deliberately excluded; memory equivalence is
// established through trace equality of loaded values.
struct StateDigest {
  uint64_t value = 0;
  friend bool operator==(const StateDigest&, const StateDigest&) = default;
};

// Exit status used when a trap is taken with mtvec = 0 (no handler).
inline constexpr uint64_t kFatalTrapExit = 133;

/// Shared architectural state of one RV64 hart: pc, integer registers, the
/// machine-mode CSR subset, a flat byte-addressable memory region and the
/// retire counter. Both the base core and extension modules mutate their
/// results through this object; extension modules reach it through the
/// accessor table declared in ext_abi.h.
///
/// An ArchState instance is single-threaded. Distinct instances are
/// independent and may run in parallel.
class ArchState {
 public:
  ArchState(uint64_t mem_base, uint64_t mem_size)
      : mem_base_(mem_base), mem_(mem_size, 0) {}

  /// Reset to the deterministic start state: pc at the entry point, all
  /// GPRs zero, CSRs zero except misa (MXL=64, base I set), counter zero.
  /// Memory contents are left alone so an ELF image survives the reset.
  void reset(uint64_t entry) {
    pc_ = entry;
    gprs_.fill(0);
    csrs_ = CsrFile{};
    csrs_.misa = kMisaBase;
    minstret_ = 0;
    halted_.reset();
    clear_step_effects();
  }

  uint64_t pc() const { return pc_; }
  void set_pc(uint64_t pc) { pc_ = pc; }

  uint64_t gpr_read(uint32_t idx) const {
    assert(idx < 32);
    return gprs_[idx];
  }

  /// Writes x<idx>; writes to x0 are discarded. Records the write for the
  /// per-step trace capture.
  void gpr_write(uint32_t idx, uint64_t value) {
    assert(idx < 32);
    if (idx == 0)
      return;
    gprs_[idx] = value;
    last_write_rd_ = static_cast<int32_t>(idx);
    last_write_value_ = value;
  }

  uint64_t mem_base() const { return mem_base_; }
  uint64_t mem_size() const { return mem_.size(); }

  bool mem_in_bounds(uint64_t addr, uint64_t size) const {
    return addr >= mem_base_ && size <= mem_.size() &&
           addr - mem_base_ <= mem_.size() - size;
  }

  /// Little-endian load of 1/2/4/8 bytes, zero-extended. Misaligned
  /// addresses are permitted. On an out-of-bounds access raises
  /// LoadAccessFault with tval = addr and returns false.
  bool mem_load(uint64_t addr, uint32_t size, uint64_t& out) {
    if (!mem_in_bounds(addr, size)) {
      raise_trap({TrapCause::LoadAccessFault, addr});
      return false;
    }
    uint64_t v = 0;
    std::memcpy(&v, mem_.data() + (addr - mem_base_), size);
    out = v;
    return true;
  }

  /// Little-endian store of the low `size` bytes of value. On an
  /// out-of-bounds access raises StoreAccessFault with tval = addr and
  /// returns false. An 8-byte store to the HTIF watch address with an odd
  /// value halts the hart with exit code value >> 1.
  bool mem_store(uint64_t addr, uint32_t size, uint64_t value) {
    if (!mem_in_bounds(addr, size)) {
      raise_trap({TrapCause::StoreAccessFault, addr});
      return false;
    }
    std::memcpy(mem_.data() + (addr - mem_base_), &value, size);
    if (htif_tohost_ && addr == *htif_tohost_ && size == 8 && (value & 1))
      halted_ = value >> 1;
    return true;
  }

  /// Raw image copy used by the ELF loader; no traps, no HTIF.
  bool mem_write_block(uint64_t addr, const uint8_t* data, uint64_t size) {
    if (size != 0 && !mem_in_bounds(addr, size))
      return false;
    std::memcpy(mem_.data() + (addr - mem_base_), data, size);
    return true;
  }

  const uint8_t* mem_data() const { return mem_.data(); }

  /// Takes a trap in machine mode, direct vectoring: mepc gets the pc of
  /// the faulting instruction, mcause/mtval record the cause, and control
  /// transfers to mtvec. With mtvec = 0 there is no handler and the hart
  /// halts with the fatal-trap exit code. GPRs and memory are untouched.
  void raise_trap(Trap t) {
    csrs_.mepc = pc_;
    csrs_.mcause = static_cast<uint64_t>(t.cause);
    csrs_.mtval = t.tval;
    last_trap_ = t;
    if (csrs_.mtvec == 0) {
      halted_ = kFatalTrapExit;
    } else {
      pc_ = csrs_.mtvec;
    }
  }

  bool csr_read(uint16_t addr, uint64_t& out) const {
    switch (addr) {
      case csr::kMisa: out = csrs_.misa; return true;
      case csr::kMhartid: out = csrs_.mhartid; return true;
      case csr::kMtvec: out = csrs_.mtvec; return true;
      case csr::kMepc: out = csrs_.mepc; return true;
      case csr::kMcause: out = csrs_.mcause; return true;
      case csr::kMtval: out = csrs_.mtval; return true;
      case csr::kMcycle:
      case csr::kMinstret: out = minstret_; return true;
      default: return false;
    }
  }

  /// misa is WARL and keeps its computed value; the counters track retires
  /// and ignore writes. Read-only addresses report CsrWrite::ReadOnly so
  /// the executor can raise an illegal-instruction trap.
  CsrWrite csr_write(uint16_t addr, uint64_t value) {
    if (csr::is_read_only(addr))
      return addr == csr::kMhartid ? CsrWrite::ReadOnly : CsrWrite::Unimplemented;
    switch (addr) {
      case csr::kMisa: return CsrWrite::Ok;
      case csr::kMtvec: csrs_.mtvec = value; return CsrWrite::Ok;
      case csr::kMepc: csrs_.mepc = value; return CsrWrite::Ok;
      case csr::kMcause: csrs_.mcause = value; return CsrWrite::Ok;
      case csr::kMtval: csrs_.mtval = value; return CsrWrite::Ok;
      case csr::kMcycle:
      case csr::kMinstret: return CsrWrite::Ok;
      default: return CsrWrite::Unimplemented;
    }
  }

  const CsrFile& csrs() const { return csrs_; }

  /// Sets or clears the misa bit for an extension letter. 'I' stays set.
  void set_isa_letter(char letter, bool on) {
    assert(letter >= 'A' && letter <= 'Z');
    if (letter == 'I')
      return;
    uint64_t bit = 1ull << (letter - 'A');
    if (on)
      csrs_.misa |= bit;
    else
      csrs_.misa &= ~bit;
  }

  uint64_t minstret() const { return minstret_; }
  void retire() { ++minstret_; }

  bool halted() const { return halted_.has_value(); }
  std::optional<uint64_t> exit_code() const { return halted_; }
  void halt(uint64_t code) { halted_ = code; }

  void set_htif_tohost(uint64_t addr) { htif_tohost_ = addr; }
  std::optional<uint64_t> htif_tohost() const { return htif_tohost_; }

  // Per-step effect capture used by the engine to build trace records.
  void clear_step_effects() {
    last_write_rd_ = -1;
    last_trap_.reset();
  }
  bool has_gpr_writeback() const { return last_write_rd_ >= 0; }
  uint32_t writeback_rd() const { return static_cast<uint32_t>(last_write_rd_); }
  uint64_t writeback_value() const { return last_write_value_; }
  const std::optional<Trap>& pending_trap() const { return last_trap_; }

  StateDigest snapshot() const;

 private:
  // MXL = 2 (64-bit) with the base 'I' bit; extension letters are added as
  // modules register.
  static constexpr uint64_t kMisaBase = (2ull << 62) | (1ull << ('I' - 'A'));

  uint64_t pc_ = 0;
  std::array<uint64_t, 32> gprs_{};
  CsrFile csrs_;
  uint64_t minstret_ = 0;
  uint64_t mem_base_;
  std::vector<uint8_t> mem_;
  std::optional<uint64_t> halted_;
  std::optional<uint64_t> htif_tohost_;

  int32_t last_write_rd_ = -1;
  uint64_t last_write_value_ = 0;
  std::optional<Trap> last_trap_;
};

}  // namespace modriscv
