#include "catgrp/scan.hpp"

namespace catgrp::scan {

namespace {
Mode g_mode = Mode::automatic;
}

void set_mode(Mode m) { g_mode = m; }
Mode mode() { return g_mode; }

}  // namespace catgrp::scan
