#pragma once

#include "argroth/abelian_group.hpp"
#include "argroth/basechange.hpp"
#include "argroth/basechange_io.hpp"
#include "argroth/colimit.hpp"
#include "argroth/direct_system.hpp"
#include "argroth/errors.hpp"
#include "argroth/group_hom.hpp"
#include "argroth/integer_matrix.hpp"
#include "argroth/quiver.hpp"
#include "argroth/quiver_io.hpp"
#include "argroth/smith_normal_form.hpp"
