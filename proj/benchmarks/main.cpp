// Part of ssttool, a toolkit for symmetry handling in stable set problems.
// Licensed under the Apache License 2.0; see LICENSE.

#include <benchmark/benchmark.h>

int main(int argc, char** argv)
{
   benchmark::Initialize(&argc, argv);
   if (benchmark::ReportUnrecognizedArguments(argc, argv))
      return 1;
   benchmark::RunSpecifiedBenchmarks();
   return 0;
}
