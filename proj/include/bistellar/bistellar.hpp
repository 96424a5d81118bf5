/*
   Copyright 2026 The bistellar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "checkmove.hpp"
#include "distgeom.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "oracle_suites.hpp"
#include "pachner.hpp"
#include "pentagon.hpp"
#include "pointconfig.hpp"
#include "polymatrix.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "spine.hpp"
#include "triangulation.hpp"
#include "variety.hpp"
