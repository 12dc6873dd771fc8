/*
   Copyright 2026 The knotslice Authors

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

#include "knotslice/algebra/cyclotomic.hpp"
#include "knotslice/algebra/determinant.hpp"
#include "knotslice/algebra/laurent.hpp"
#include "knotslice/algebra/matrix.hpp"
#include "knotslice/algebra/ring.hpp"
#include "knotslice/algebra/smith.hpp"
#include "knotslice/blanchfield/cover_group.hpp"
#include "knotslice/blanchfield/pairing.hpp"
#include "knotslice/errors.hpp"
#include "knotslice/ff/factor.hpp"
#include "knotslice/ff/fp_poly.hpp"
#include "knotslice/ff/norm.hpp"
#include "knotslice/ff/prime_field.hpp"
#include "knotslice/knot/braid.hpp"
#include "knotslice/knot/seifert.hpp"
#include "knotslice/knot/wirtinger.hpp"
#include "knotslice/metabolizers/character.hpp"
#include "knotslice/metabolizers/metabolizers.hpp"
#include "knotslice/report/report.hpp"
#include "knotslice/twisted/fox.hpp"
#include "knotslice/twisted/polynomial.hpp"
#include "knotslice/twisted/representation.hpp"
