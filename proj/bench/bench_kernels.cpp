// Compares the serial reference elimination against the OpenMP path on random
// dense matrices over Q and F_p, checking agreement while timing.
#include <chrono>
#include <iostream>
#include <random>

#include "hopfcat/exactlin.hpp"

using namespace hopfcat;

namespace {

Matrix random_matrix(FieldSpec f, int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = f.kind == FieldSpec::Kind::Rationals ? Scalar::of(f, num(rng), den(rng))
                                                              : Scalar::of(f, num(rng));
    return m;
}

double run_once(const Matrix& a, Exec ex) {
    auto start = std::chrono::steady_clock::now();
    RrefResult r = rref(a, ex);
    auto stop = std::chrono::steady_clock::now();
    volatile int sink = r.rank;
    (void)sink;
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_size = argc > 1 ? std::atoi(argv[1]) : 160;
    std::mt19937 rng(42);

    std::cout << "field  size     serial[s]  parallel[s]  speedup  identical\n";
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime_field(40009)}) {
        for (int size = 40; size <= max_size; size *= 2) {
            Matrix a = random_matrix(f, size, size + 8, rng);
            double ts = run_once(a, Exec::Serial);
            double tp = run_once(a, Exec::Parallel);
            bool same = rref(a, Exec::Serial).r == rref(a, Exec::Parallel).r;
            std::printf("%-6s %4dx%-4d %9.4f  %10.4f  %7.2f  %s\n", f.str().c_str(), size, size + 8, ts, tp,
                        ts / tp, same ? "yes" : "NO");
        }
    }
    return 0;
}
