/*
   Copyright 2026 The qtele Authors

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

// Umbrella header: deciding the applicability of the q-analogue of
// Zeilberger's algorithm for bivariate q-hypergeometric terms, with
// verifiable certificates.

#include "decide.hpp"      // decision pipeline
#include "report.hpp"      // JSON report / pair / corpus formats
#include "telescope.hpp"   // qZ-pair verification and bounded search
