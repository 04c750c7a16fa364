#pragma once

namespace irisdet {

// Worker-thread bound for the OpenMP kernels. 0 restores the library
// default (all hardware threads). Thread count never changes results:
// every parallel kernel writes disjoint output slots.
void setThreadCount(int n);

// Resolved bound, >= 1. Always 1 when built without OpenMP.
int threadCount();

bool openmpEnabled();

} // namespace irisdet
