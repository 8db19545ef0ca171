//  Copyright 2026 The predual authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef PREDUAL_PREDUAL_HPP_
#define PREDUAL_PREDUAL_HPP_

#include "predual/axioms.hpp"
#include "predual/core.hpp"
#include "predual/exemplars.hpp"
#include "predual/io.hpp"
#include "predual/morphism.hpp"
#include "predual/rational.hpp"
#include "predual/space.hpp"
#include "predual/spectrum.hpp"
#include "predual/structure.hpp"
#include "predual/topology.hpp"

#endif  // PREDUAL_PREDUAL_HPP_
