// one line per acceptance criterion; exit status 1 if any is red
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qdom/suites.hpp"

using namespace qdom;

struct Criterion {
    int id;
    const char* title;
    std::vector<std::string> suites;
};

int main() {
    const std::vector<Criterion> list{
        {1, "confluence", {"confluence"}},
        {2, "hopf consistency", {"hopf-consistency"}},
        {3, "representation oracle", {"disc-integrals"}},
        {4, "disc eigenfunctions", {"disc-eigen"}},
        {5, "spectral bounds", {"spectral-bounds"}},
        {6, "green inversion", {"green-inverse"}},
        {7, "fourier round trip", {"fourier"}},
        {8, "berezin", {"berezin-assoc", "berezin-closed", "berezin-cn", "bargmann"}},
        {9, "fock", {"fock-two-ways", "fock-invariance"}},
        {10, "hidden symmetry", {"hidden-symmetry"}},
        {11, "su22", {"su22-bq", "su22-ladder", "su22-schur", "su22-yspec"}},
        {12, "bergman kernel", {"bergman-kernel"}},
        {13, "penrose", {"penrose-aux", "penrose-lowest"}},
        {14, "q-special", {"qspecial-identities"}},
        {15, "clifford", {"clifford-dims"}},
    };
    int red = 0;
    for (auto& c : list) {
        auto t0 = std::chrono::steady_clock::now();
        Report all("criterion " + std::to_string(c.id));
        for (auto& s : c.suites) all.merge(run_suite(s), s + "/");
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int bad = int(all.failures());
        std::printf("criterion %2d %-22s %s  %zu checks, %d failed, %.1fs\n", c.id, c.title, all.ok() ? "PASS" : "FAIL",
                    all.checks.size(), bad, sec);
        if (!all.ok()) {
            ++red;
            for (auto& f : all.checks)
                if (!f.pass) std::printf("    %s: %s\n", f.id.c_str(), f.witness.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria pass\n", int(list.size()) - red, list.size());
    return red ? 1 : 0;
}
