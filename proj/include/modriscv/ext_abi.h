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

#ifndef MODRISCV_EXT_ABI_H
#define MODRISCV_EXT_ABI_H

// Binary interface between the host emulator and ISA extension modules.
//
// An extension module is a unit of compiled code (linked into the host or
// loaded from a shared library) that exports one symbol:
//
//     const modriscv_ext_info* modriscv_ext_entry(void);
//
// The returned info block carries the ABI version, the module name, the ISA
// letters the module claims, and the eight entry points the host drives.
// All functions use the platform's standard C calling convention. The exact
// struct layout is documented in docs/abi.md and must not change within an
// ABI version.

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

// Single-integer version, compared for equality by the host loader.
#define MODRISCV_ABI_VERSION 1u

// Return values of the execute entry point.
#define MODRISCV_RETIRE_SUCCESS 0
#define MODRISCV_RETIRE_TRAP 1

// Machine trap causes (mcause values) usable with raise_trap.
#define MODRISCV_TRAP_ILLEGAL_INSTRUCTION 2u
#define MODRISCV_TRAP_BREAKPOINT 3u
#define MODRISCV_TRAP_LOAD_ACCESS_FAULT 5u
#define MODRISCV_TRAP_STORE_ACCESS_FAULT 7u
#define MODRISCV_TRAP_ECALL_FROM_M 11u

// Opaque host-owned architectural state.
typedef struct modriscv_state modriscv_state;

// Opaque module-owned decoded-instruction handle. Created and destroyed by
// the owning module; the host only passes it between that module's own
// entry points, never across modules.
typedef void* modriscv_ast_handle;

// Accessor table through which a module reads and mutates the shared
// architectural state. Modules must not keep pointers into host memory;
// all state access goes through these functions. The table pointer handed
// to init() and execute() stays valid until fini() returns.
//
// mem_load / mem_store return 0 on success. On an access fault they raise
// the trap themselves and return nonzero; the module should then return
// MODRISCV_RETIRE_TRAP without further state changes.
// read_csr / write_csr return 0 on success, nonzero for an unimplemented
// CSR index (no trap is raised).
typedef struct modriscv_state_access {
  modriscv_state* ctx;
  uint64_t (*read_gpr)(modriscv_state* s, uint32_t idx);
  void (*write_gpr)(modriscv_state* s, uint32_t idx, uint64_t value);
  uint64_t (*read_pc)(modriscv_state* s);
  void (*write_pc)(modriscv_state* s, uint64_t pc);
  int32_t (*mem_load)(modriscv_state* s, uint64_t addr, uint32_t size,
                      uint64_t* out);
  int32_t (*mem_store)(modriscv_state* s, uint64_t addr, uint32_t size,
                       uint64_t value);
  void (*raise_trap)(modriscv_state* s, uint32_t cause, uint64_t tval);
  int32_t (*read_csr)(modriscv_state* s, uint32_t csr, uint64_t* out);
  int32_t (*write_csr)(modriscv_state* s, uint32_t csr, uint64_t value);
} modriscv_state_access;

// The eight per-module entry points.
//
// Lifecycle of one instruction: the host calls ast_create, then decode with
// the fetched word. decode returns 1 if the module claims the word and 0
// otherwise (the handle then holds the module's illegal marker). For a
// claimed word the host may call print_insn and calls execute, then always
// ast_kill. A handle never outlives the step that created it.
//
// execute must return MODRISCV_RETIRE_SUCCESS, or MODRISCV_RETIRE_TRAP
// after calling raise_trap exactly once. The host advances the pc past a
// successfully executed instruction; a module only writes the pc if the
// instruction itself redirects control flow.
//
// init is called once when the module is registered, fini once when the
// host shuts the registry down (reverse registration order).
typedef struct modriscv_ext_vtable {
  int32_t (*decode)(modriscv_ast_handle ast, uint32_t word);
  int32_t (*execute)(modriscv_ast_handle ast, const modriscv_state_access* sa);
  void (*print_insn)(modriscv_ast_handle ast, char* buf, uint32_t cap);
  modriscv_ast_handle (*ast_create)(void);
  void (*ast_kill)(modriscv_ast_handle ast);
  void (*init)(const modriscv_state_access* sa);
  void (*fini)(void);
  const char* (*isa_letters)(void);
} modriscv_ext_vtable;

// Root descriptor returned by modriscv_ext_entry. name and isa_letters are
// NUL-terminated strings owned by the module and valid until fini returns.
// isa_letters must equal the string returned by entry_points.isa_letters()
// and consist of capital letters A-Z ('I' is reserved for the base).
typedef struct modriscv_ext_info {
  uint32_t abi_version;
  const char* name;
  const char* isa_letters;
  modriscv_ext_vtable entry_points;
} modriscv_ext_info;

typedef const modriscv_ext_info* (*modriscv_ext_entry_fn)(void);

// Name of the symbol a dynamically loadable module must export.
#define MODRISCV_EXT_ENTRY_SYMBOL "modriscv_ext_entry"

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // MODRISCV_EXT_ABI_H
