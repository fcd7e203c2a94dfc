// Copyright 2026 The robust-locus Authors
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

namespace robust_locus {

/// Malformed or inconsistent input (bad ids, broken invariants, bad flags).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested solution does not exist (e.g. t unreachable from s).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, std::uint64_t product)
        : std::runtime_error(what), product_(product) {}

    std::uint64_t product() const { return product_; }

private:
    std::uint64_t product_;
};

/// Operation not defined for the given input kind.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation kept for testing; Parallel uses OpenMP when available and
/// must produce bit-identical results.
enum class Exec { Serial, Parallel };

}  // namespace robust_locus
