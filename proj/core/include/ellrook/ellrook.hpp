#ifndef ELLROOK_ELLROOK_HPP_
#define ELLROOK_ELLROOK_HPP_

#include "ellrook/alpha_model.hpp"
#include "ellrook/boards.hpp"
#include "ellrook/matching_model.hpp"
#include "ellrook/theta.hpp"
#include "ellrook/types.hpp"
#include "ellrook/weights.hpp"

#endif  // ELLROOK_ELLROOK_HPP_
