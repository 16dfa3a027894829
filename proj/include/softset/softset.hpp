#ifndef SOFTSET_SOFTSET_HPP
#define SOFTSET_SOFTSET_HPP

#include "central_soft_set.hpp"
#include "classic_soft_set.hpp"
#include "cli.hpp"
#include "context.hpp"
#include "decision.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "index_set.hpp"
#include "laws.hpp"
#include "workspace.hpp"

#endif  // SOFTSET_SOFTSET_HPP
