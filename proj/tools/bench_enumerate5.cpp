#include <chrono>
#include <iostream>

#include "divps/oracles.hpp"

#ifdef DIVPS_HAVE_OPENMP
#include <omp.h>
#endif

// compares the serial reference scan against the OpenMP scan and verifies
// the reports are identical

int main()
{
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::duration d) {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
  };

  auto t0 = clock::now();
  const divps::enum_report serial = divps::enumerate5_serial();
  const double serial_ms = ms(clock::now() - t0);
  std::cout << "serial:      " << serial_ms << " ms  (lawful " << serial.lawful << ")\n";

#ifdef DIVPS_HAVE_OPENMP
  for (int threads : {2, 4, omp_get_max_threads()}) {
    if (threads < 2) continue;
    t0 = clock::now();
    const divps::enum_report par = divps::enumerate5(threads);
    const double par_ms = ms(clock::now() - t0);
    std::cout << "openmp x" << threads << ":   " << par_ms << " ms  speedup "
              << serial_ms / par_ms << "  identical " << (par == serial ? "yes" : "NO") << '\n';
    if (par != serial) return 1;
  }
#else
  std::cout << "built without OpenMP; nothing to compare\n";
#endif
  return 0;
}
