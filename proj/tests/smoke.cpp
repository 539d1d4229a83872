#include <chrono>
#include <fstream>
#include <iostream>
#include "dchar/spaces.hpp"
#include "dchar/cohomology.hpp"
using namespace dchar;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point a, Clock::time_point b){ return std::chrono::duration<double>(b-a).count(); }
long rss_mb() {
    std::ifstream f("/proc/self/status");
    std::string k;
    long v;
    std::string unit;
    while (f >> k) { if (k == "VmRSS:") { f >> v >> unit; return v / 1024; } std::getline(f, k); }
    return -1;
}
int main() {
    auto t0 = Clock::now();
    auto t5 = build_standard_space("torus5");
    Space X(t5);
    X.reduction();
    auto t2 = Clock::now();
    std::cout << "reduction done " << secs(t0,t2) << "s rss " << rss_mb() << "MB" << std::endl;
    auto& h3 = X.cohomology_int(3);
    auto t3 = Clock::now();
    std::cout << "H^3 free " << h3.free_rank() << " torsion " << h3.torsion_orders().size()
              << " " << secs(t2,t3) << "s rss " << rss_mb() << "MB" << std::endl;
    auto fc = fundamental_cycle_int(*t5);
    auto t4 = Clock::now();
    std::cout << "fcycle " << secs(t3,t4) << "s rss " << rss_mb() << "MB" << std::endl;
    auto& H5 = X.homology_int(5);
    auto t5b = Clock::now();
    std::cout << "H_5 free " << H5.free_rank() << " " << secs(t4,t5b) << "s rss " << rss_mb() << "MB" << std::endl;
    auto co = H5.coordinates(fc);
    auto t6 = Clock::now();
    std::cout << "[X] coords";
    for (auto& v : co.free_part) std::cout << " " << v.get_str();
    std::cout << " " << secs(t5b,t6) << "s rss " << rss_mb() << "MB" << std::endl;
    return 0;
}
