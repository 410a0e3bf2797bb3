#pragma once

#include "hopfmzv/composition.hpp"
#include "hopfmzv/errors.hpp"
#include "hopfmzv/linear.hpp"
#include "hopfmzv/morphism.hpp"
#include "hopfmzv/mzv.hpp"
#include "hopfmzv/quasi_shuffle.hpp"
#include "hopfmzv/rational.hpp"
#include "hopfmzv/shuffle.hpp"
#include "hopfmzv/verify.hpp"
