#pragma once

#include "chessarm/chessbot.hpp"
#include "chessarm/command.hpp"
#include "chessarm/dynamics.hpp"
#include "chessarm/engine.hpp"
#include "chessarm/error.hpp"
#include "chessarm/kinematics.hpp"
#include "chessarm/trace_io.hpp"
#include "chessarm/workspace.hpp"
