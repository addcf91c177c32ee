#!/usr/bin/env python3
"""High-precision oracle for the worked triple (a1, a2, a3) = (2, 1, sqrt 5).

Writes tests/unit/golden_values.hpp. Every value is computed here from the
closed forms at 50 significant digits, independently of the C++ sources.

    python3 tests/oracles/golden.py [output]
"""

import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 50

A1 = mp.mpf(2)
A2 = mp.mpf(1)
A3 = mp.sqrt(5)
N_MAX = 10
TRUNCATED_LEVELS = 6


def derived():
    d = {}
    delta = A1**2 - A2**2
    r = mp.sqrt(delta**2 - A3**2)
    s = A1**2 + A2**2
    d["coupling"] = A3 / (2 * A1 * A2)
    d["omega1_sq"] = (s + r) / 2
    d["omega2_sq"] = (s - r) / 2
    d["freq_sum"] = s
    d["freq_product"] = A1**2 * A2**2 + A3**2 / 4
    d["alpha1"] = (delta + r) / (1j * A3)
    d["alpha2"] = (delta - r) / (1j * A3)
    d["U"] = mp.root((s - r) / (s + r), 4)
    d["omega"] = mp.root(d["freq_product"], 4)
    d["m"] = 2 / d["omega"] ** 2 * mp.sqrt(delta**2 / A3**2 - 1)
    d["omega1"] = d["omega"] / d["U"]
    d["omega2"] = d["U"] * d["omega"]
    return d


def case_three_roots():
    a1, a2, a3 = mp.mpf(2), mp.mpf(1), mp.mpf(4)
    s = a1**2 + a2**2
    disc = mp.sqrt(mp.mpc((a1**2 - a2**2) ** 2 - a3**2))
    return (s + disc) / 2, (s - disc) / 2


def intermediate_rows(d):
    al1, al2 = d["alpha1"], d["alpha2"]
    m = mp.zeros(4, 4)
    m[0, 0] = A1 / (al2 - al1)
    m[0, 1] = -al2 * A2 / (al2 - al1)
    m[1, 0] = A1 / (al1 - al2)
    m[1, 1] = -al1 * A2 / (al1 - al2)
    m[2, 2] = al1 / A1
    m[2, 3] = 1 / A2
    m[3, 2] = al2 / A1
    m[3, 3] = 1 / A2
    return m


def rescaling(d):
    s1 = mp.sqrt(abs(d["alpha1"]) / (1 / d["U"]))
    s2 = mp.sqrt(abs(d["alpha2"]) / d["U"])
    return s1, s2


def transformed_form(m):
    c = mp.zeros(4, 4)
    c[0, 0] = A1**2
    c[1, 1] = A2**2
    c[2, 2] = 1
    c[3, 3] = 1
    c[2, 3] = c[3, 2] = 1j * A3 / (2 * A1 * A2)
    inv = m**-1
    return inv.T * c * inv


def intermediate_coefficients(d):
    al1, al2 = d["alpha1"], d["alpha2"]
    w2 = d["omega"] ** 2
    u = d["U"]
    # P'1^2, X'1^2, P'2^2, X'2^2
    return [
        mp.re(w2 / u**2 / (2 * (1 + al1**2))),
        mp.re((1 + al1**2) / 2),
        mp.re(w2 * u**2 / (2 * (1 + al2**2))),
        mp.re((1 + al2**2) / 2),
    ]


def branch_two_coefficients(d):
    u, m, w = d["U"], d["m"], d["omega"]
    # P1^2, X1^2, P2^2, X2^2 with the lower signs
    return [-1 / (u * 2 * m), -m * w**2 / (2 * u), u / (2 * m), u * m * w**2 / 2]


def bounded_levels(w1, w2, k):
    levels = []
    for n1 in range(k + 1):
        for n2 in range(k + 1):
            levels.append(((n1 + mp.mpf(1) / 2) * w1 + (n2 + mp.mpf(1) / 2) * w2, n1, n2))
    levels.sort(key=lambda t: t[0])
    return levels[:k]


def single_mode(n_max):
    n = n_max + 1
    a = mp.zeros(n, n)
    for k in range(1, n):
        a[k - 1, k] = mp.sqrt(k)
    ad = a.T
    x = (a + ad) / mp.sqrt(2)
    p = 1j * (ad - a) / mp.sqrt(2)
    return x, p


def kron(a, b):
    out = mp.zeros(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] == 0:
                continue
            for k in range(b.rows):
                for l in range(b.cols):
                    out[i * b.rows + k, j * b.cols + l] = a[i, j] * b[k, l]
    return out


def truncated_hamiltonian(n_max):
    x, p = single_mode(n_max)
    eye = mp.eye(n_max + 1)
    xx = x * x
    pp = p * p
    c = A3 / (2 * A1 * A2)
    return (kron(pp, eye) + kron(eye, pp)) / 2 + (A1**2 * kron(xx, eye) + A2**2 * kron(eye, xx)) / 2 \
        + 1j * c * kron(p, p)


def truncated_spectrum(n_max, count):
    h = truncated_hamiltonian(n_max)
    n = n_max + 1
    eigs = []
    for parity in (0, 1):
        idx = [i for i in range(n * n) if (i // n + i % n) % 2 == parity]
        block = mp.matrix(len(idx), len(idx))
        for r, i in enumerate(idx):
            for c, j in enumerate(idx):
                block[r, c] = h[i, j]
        eigs.extend(mp.eig(block, left=False, right=False))
    eigs.sort(key=lambda z: (mp.re(z), mp.im(z)))
    return h, eigs[:count]


def pt_form_two_term():
    # psi = (|00> + i|01>)/sqrt 2; psi^dagger P conj(psi) with parities (+1, -1)
    psi = [1 / mp.sqrt(2), 1j / mp.sqrt(2)]
    parity = [1, -1]
    value = sum(mp.conj(psi[k]) * parity[k] * mp.conj(psi[k]) for k in range(2))
    assert abs(mp.im(value)) < mp.mpf(10) ** -45
    return mp.re(value)


def fmt_real(v):
    v = mp.mpf(v)
    if abs(v) < mp.mpf(10) ** -40:
        return "0.0"
    return mp.nstr(v, 40)


def emit(lines, name, value):
    lines.append(f"inline constexpr double {name} = {fmt_real(value)};")


def emit_complex(lines, name, value):
    value = mp.mpc(value)
    lines.append(f"inline const std::complex<double> {name}{{{fmt_real(value.real)}, {fmt_real(value.imag)}}};")


def emit_matrix(lines, name, m):
    lines.append(f"inline const std::array<std::complex<double>, 16> {name}{{{{")
    for i in range(4):
        row = []
        for j in range(4):
            z = mp.mpc(m[i, j])
            row.append(f"{{{fmt_real(z.real)}, {fmt_real(z.imag)}}}")
        lines.append("    " + ", ".join(row) + ",")
    lines.append("}};")


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "unit" / "golden_values.hpp"
    d = derived()
    inter = intermediate_rows(d)
    s1, s2 = rescaling(d)
    printed = mp.diag([s1, s2, 1 / s1, 1 / s2]) * inter
    canonical = mp.diag([-s1, -s2, 1 / s1, 1 / s2]) * inter
    inter_form = transformed_form(inter)
    final_form = transformed_form(canonical)
    r1, r2 = case_three_roots()
    levels = bounded_levels(d["omega1"], d["omega2"], 4)
    h, eigs = truncated_spectrum(N_MAX, TRUNCATED_LEVELS)

    lines = [
        "// Generated by tests/oracles/golden.py at 50 significant digits. Do not edit.",
        "// Worked triple (a1, a2, a3) = (2, 1, sqrt 5).",
        "#ifndef PTLAB_TESTS_GOLDEN_VALUES_HPP",
        "#define PTLAB_TESTS_GOLDEN_VALUES_HPP",
        "",
        "#include <array>",
        "#include <complex>",
        "",
        "namespace golden {",
        "",
    ]
    emit(lines, "kA3", A3)
    emit(lines, "kCoupling", d["coupling"])
    emit(lines, "kOmega1Sq", d["omega1_sq"])
    emit(lines, "kOmega2Sq", d["omega2_sq"])
    emit(lines, "kFrequencySum", d["freq_sum"])
    emit(lines, "kFrequencyProduct", d["freq_product"])
    emit_complex(lines, "kCaseThreeRoot1", r1)
    emit_complex(lines, "kCaseThreeRoot2", r2)
    emit_complex(lines, "kAlpha1", d["alpha1"])
    emit_complex(lines, "kAlpha2", d["alpha2"])
    emit(lines, "kU", d["U"])
    emit(lines, "kOmega", d["omega"])
    emit(lines, "kMass", d["m"])
    emit(lines, "kOmega1", d["omega1"])
    emit(lines, "kOmega2", d["omega2"])
    emit(lines, "kScale1", s1)
    emit(lines, "kScale2", s2)
    lines.append("")
    lines.append("// Rows define the new variables, columns are x1 x2 p1 p2.")
    emit_matrix(lines, "kIntermediateMap", inter)
    emit_matrix(lines, "kPrintedFinalMap", printed)
    emit_matrix(lines, "kFinalMap", canonical)
    lines.append("")
    lines.append("// Symmetric matrices C of H = 1/2 z^T C z after each change of variables.")
    emit_matrix(lines, "kIntermediateForm", inter_form)
    emit_matrix(lines, "kFinalForm", final_form)
    lines.append("")
    lines.append("// Coefficients of P'1^2, X'1^2, P'2^2, X'2^2.")
    coeffs = intermediate_coefficients(d)
    lines.append("inline constexpr std::array<double, 4> kIntermediateCoefficients{"
                 + ", ".join(fmt_real(c) for c in coeffs) + "};")
    lines.append("// Coefficients of P1^2, X1^2, P2^2, X2^2 in the lower-sign branch.")
    coeffs = branch_two_coefficients(d)
    lines.append("inline constexpr std::array<double, 4> kBranchTwoCoefficients{"
                 + ", ".join(fmt_real(c) for c in coeffs) + "};")
    lines.append("")
    emit(lines, "kGroundLevel", (d["omega1"] + d["omega2"]) / 2)
    emit(lines, "kNaiveGroundBranchOne", (d["omega1"] - d["omega2"]) / 2)
    lines.append("inline constexpr std::array<double, 4> kBoundedLevels{"
                 + ", ".join(fmt_real(e) for e, _, _ in levels) + "};")
    lines.append("inline constexpr std::array<std::array<int, 2>, 4> kBoundedQuantumNumbers{{"
                 + ", ".join(f"{{{n1}, {n2}}}" for _, n1, n2 in levels) + "}};")
    lines.append("")
    emit(lines, "kVacuumDiagonal", mp.re(h[0, 0]))
    emit(lines, "kPtFormTwoTerm", pt_form_two_term())
    lines.append(f"inline constexpr int kTruncationNmax = {N_MAX};")
    lines.append("// Lowest eigenvalues of the truncated Hamiltonian, by real part.")
    lines.append(f"inline const std::array<std::complex<double>, {TRUNCATED_LEVELS}> kTruncatedEigenvalues{{{{")
    for z in eigs:
        lines.append(f"    {{{fmt_real(mp.re(z))}, {fmt_real(mp.im(z))}}},")
    lines.append("}};")
    lines.append("")
    lines.append("} // namespace golden")
    lines.append("")
    lines.append("#endif")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
