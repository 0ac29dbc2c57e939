#pragma once
#include <map>
#include <optional>
#include <vector>

#include "combgas/graph.hpp"

namespace combgas {

struct SpectralResult {
    double top_eigenvalue = 0.0;
    std::vector<double> pf_vector;  // anchor-normalized
    std::optional<std::vector<double>> full_spectrum;
    double residual = 0.0;  // ||Av - lam v|| / ||v||
    int iterations = 0;
};

inline constexpr int kDefaultDenseCap = 4096;

std::vector<double> dense_spectrum(const Graph& g, int dense_cap = kDefaultDenseCap);
std::vector<double> laplacian_spectrum(const Graph& g, int dense_cap = kDefaultDenseCap);
// eigenvalues of a symmetric tridiagonal matrix, ascending
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off);

// Largest adjacency eigenvalue and its eigenvector. Connectivity is not required here.
SpectralResult lanczos_top(const Graph& g, double tol = 1e-10, int max_krylov = 400, int max_restarts = 200);

// Perron-Frobenius pair of a connected graph. anchor = -1 picks the all-zero label if present, else vertex 0.
SpectralResult top_eigenpair(const Graph& g, double tol = 1e-10, int anchor = -1);

int default_anchor(const Graph& g);

}  // namespace combgas
