#pragma once

#include "kripkelab/correspondence.hpp"
#include "kripkelab/error.hpp"
#include "kripkelab/formula.hpp"
#include "kripkelab/io.hpp"
#include "kripkelab/kripke.hpp"
#include "kripkelab/logics.hpp"
