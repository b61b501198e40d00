#include <csignal>
#include <iostream>
#include <stop_token>

#include "dtrip/cli/cli.hpp"

namespace {

std::stop_source g_stop;

extern "C" void on_interrupt(int) { g_stop.request_stop(); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::vector<std::string> args(argv + 1, argv + argc);
  return dtrip::cli::run(args, std::cout, std::cerr, g_stop.get_token());
}
