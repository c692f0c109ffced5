// Copyright 2026 The hitlab Authors
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

#include "hitlab/error.hpp"

namespace hitlab {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kSelfLoop: return "self-loop";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kFreenessViolation: return "freeness-violation";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kInfeasible: return "infeasible-parameters";
    case ErrorKind::kVerification: return "verification";
  }
  return "unknown";
}

}  // namespace hitlab
