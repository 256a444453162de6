/*
   Copyright 2026 The idtag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v0.1.0
*/

#ifndef IDTAG_IDTAG_HPP
#define IDTAG_IDTAG_HPP

#include "analysis.hpp"
#include "concat.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "formats.hpp"
#include "int128.hpp"
#include "numtheory.hpp"
#include "protocol.hpp"
#include "reed_solomon.hpp"
#include "rng.hpp"

#endif
