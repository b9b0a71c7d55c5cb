#pragma once

#include "msg/scene.hpp"

namespace msg
{

std::vector<std::string> builtin_names();

// the scene data a built-in example runs on; throws on unknown names
Scene builtin_scene(std::string const &name);

// full verification suite for one built-in example
Report run_builtin(std::string const &name);

} // namespace msg
