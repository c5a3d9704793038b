// Copyright 2026 The hopfcoords Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hopf/error.h"

namespace hopf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NotRotation: return "NotRotation";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotLinked: return "NotLinked";
    case ErrorKind::ParallelPlanes: return "ParallelPlanes";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::NotInY: return "NotInY";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::TooClose: return "TooClose";
    case ErrorKind::NoTransverseHeight: return "NoTransverseHeight";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NoMixedChord: return "NoMixedChord";
    case ErrorKind::CrossingChords: return "CrossingChords";
    case ErrorKind::WrongAlphaCount: return "WrongAlphaCount";
    case ErrorKind::NotInnermost: return "NotInnermost";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::PoleProximity: return "PoleProximity";
  }
  return "Unknown";
}

bool is_geometric(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotInnermost:
      return false;
    default:
      return true;
  }
}

}  // namespace hopf
