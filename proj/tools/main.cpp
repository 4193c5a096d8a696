// Copyright 2026 The restmetrics Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <iostream>

#include "restmetrics/cli.hpp"

int main(int argc, char** argv) {
    try {
        return restmetrics::run_cli(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return restmetrics::kExitUsage;
    }
}
