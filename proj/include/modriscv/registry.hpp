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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "modriscv/arch_state.hpp"
#include "modriscv/base_isa.hpp"
#include "modriscv/ext_abi.h"

namespace modriscv {

/// One registered extension module: identity, claimed ISA letters, entry
/// points, and where it came from. Entry-point semantics are identical for
/// all origins; origin only records the binding mode.
struct ModuleDescriptor {
  std::string name;
  uint32_t abi_version = 0;
  std::string isa_letters;
  modriscv_ext_vtable entry_points{};

  enum class Origin { Builtin, StaticRegistered, Dynamic };
  Origin origin = Origin::Builtin;
  std::string origin_path;     // set for Origin::Dynamic
  void* library_handle = nullptr;  // owned once registered; closed by host_fini
};

std::string origin_string(const ModuleDescriptor& d);

class RegistryError : public std::runtime_error {
 public:
  enum class Kind { DuplicateName, LetterConflict, BadDescriptor };
  RegistryError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Raised in strict-overlap mode when more than one decoder claims a word.
class OverlapError : public std::runtime_error {
 public:
  OverlapError(uint32_t word, std::vector<std::string> claimants);
  uint32_t word() const { return word_; }
  const std::vector<std::string>& claimants() const { return claimants_; }

 private:
  uint32_t word_;
  std::vector<std::string> claimants_;
};

/// Result of probing the decode chain for one word.
struct DecodeProbe {
  enum class Owner { None, Base, Module };
  Owner owner = Owner::None;
  size_t module_index = 0;  // valid when owner == Module
  BaseAst base_ast{};       // valid when owner == Base
  std::string text;         // printed form of a module-claimed word
};

/// Ordered collection of extension modules bound to one hart. Modules are
/// registered before execution starts and the order is the dispatch order:
/// extension decoders are consulted first, in registration order, with the
/// base decoder as the fallback.
///
/// The registry owns the accessor table through which modules touch the
/// shared architectural state, keeps the misa extension bits in sync with
/// the registered letters, and drives module init/fini.
class Registry {
 public:
  explicit Registry(ArchState& state);
  ~Registry();

  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  /// Validates and appends a module: name must be fresh, no ISA letter may
  /// already be claimed, the ABI version must match and the entry-point
  /// table must be complete. On success the misa bits are updated and the
  /// module's init entry point runs. Throws RegistryError.
  void register_module(ModuleDescriptor d);

  /// Consults module decoders in registration order, first claim wins,
  /// base decoder as fallback. In strict mode every decoder (including the
  /// base) is probed and more than one claimant throws OverlapError.
  DecodeProbe probe_decode(uint32_t word, bool strict = false) const;

  /// True iff letter is 'I' or some registered module claims it.
  bool isa_enabled(char letter) const;

  /// Runs each module's fini in reverse registration order, unloads any
  /// dynamic libraries, clears the misa extension bits and empties the
  /// registry. Safe to call repeatedly; later calls are no-ops.
  void host_fini();

  const std::vector<ModuleDescriptor>& modules() const { return modules_; }
  const modriscv_state_access* access() const { return &access_; }
  ArchState& state() { return state_; }

 private:
  ArchState& state_;
  modriscv_state_access access_{};
  std::vector<ModuleDescriptor> modules_;
};

/// Checks the invariants every descriptor must satisfy regardless of
/// origin; throws RegistryError{BadDescriptor} with a reason.
void validate_descriptor(const ModuleDescriptor& d);

}  // namespace modriscv
