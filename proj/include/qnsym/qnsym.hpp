#pragma once

#include "qnsym/composition.hpp"
#include "qnsym/element.hpp"
#include "qnsym/immaculate.hpp"
#include "qnsym/io.hpp"
#include "qnsym/linalg.hpp"
#include "qnsym/nsym.hpp"
#include "qnsym/pairing.hpp"
#include "qnsym/pieri.hpp"
#include "qnsym/qsym.hpp"
#include "qnsym/tableau.hpp"
