"""Regenerates tests/oracles/frozen.hpp.

Complex Hermitian construction with numpy, independent of the C++ real
representation: standard spin matrices, joint eigenvalues from a generic
linear combination, critical values from the isolated phase-space points.
"""
import numpy as np


def spin(S):
    m = np.arange(S, -S - 1, -1, dtype=float)
    jp = np.zeros((len(m), len(m)), dtype=complex)
    for i in range(1, len(m)):
        jp[i - 1, i] = np.sqrt(S * (S + 1) - m[i] * (m[i] + 1))
    jx = (jp + jp.conj().T) / 2
    jy = (jp - jp.conj().T) / 2j
    jz = np.diag(m).astype(complex)
    k = 1 / np.sqrt(S * (S + 1))
    return [k * jx, k * jy, k * jz]


def xy(a, b, S):
    j = spin(S)
    e = np.eye(2 * S + 1)
    s = [np.kron(q, e) for q in j]
    t = [np.kron(e, q) for q in j]
    c2 = (a - b - 1) / (1 - a - b)
    c3 = (b - a - 1) / (1 - a - b)
    X = s[0] @ t[0] + c2 * s[1] @ t[1] + c3 * s[2] @ t[2]
    Y = (b * (1 - a) * (s[1] @ s[1] + t[1] @ t[1]) + 2 * b * (1 - a) * c3 * s[1] @ t[1]
         + a * (1 - b) * (s[2] @ s[2] + t[2] @ t[2]) + 2 * a * (1 - b) * c2 * s[2] @ t[2])
    return X, Y, s, t


def joint(a, b, S):
    X, Y, _, _ = xy(a, b, S)
    assert np.linalg.norm(X @ Y - Y @ X) < 1e-12
    rng = np.random.default_rng(3)
    mu = rng.uniform(0.3, 0.7)
    _, v = np.linalg.eigh(X + mu * Y)
    x = np.real(np.einsum("ij,ik,kj->j", v.conj(), X, v))
    y = np.real(np.einsum("ij,ik,kj->j", v.conj(), Y, v))
    # Degenerate X + mu Y eigenspaces would mix; check the vectors are joint.
    assert np.linalg.norm(X @ v - v * x) < 1e-10 and np.linalg.norm(Y @ v - v * y) < 1e-10
    return sorted(zip(x, y))


def limiting(S):
    X, _, s, t = xy(2.0, 1.0, S)
    yp = (s[1] + t[1]) / 2
    w, v = np.linalg.eigh(yp)
    pts = []
    for val in np.unique(np.round(w, 9)):
        idx = np.abs(w - val) < 1e-9
        sub = v[:, idx].conj().T @ X @ v[:, idx]
        pts += [(float(x), float(np.mean(w[idx]))) for x in np.linalg.eigvalsh(sub)]
    return sorted(pts)


def classical(a, b, s, t):
    c2 = (a - b - 1) / (1 - a - b)
    c3 = (b - a - 1) / (1 - a - b)
    x = s[0] * t[0] + c2 * s[1] * t[1] + c3 * s[2] * t[2]
    y = (b * (1 - a) * (s[1] ** 2 + t[1] ** 2) + 2 * b * (1 - a) * c3 * s[1] * t[1]
         + a * (1 - b) * (s[2] ** 2 + t[2] ** 2) + 2 * a * (1 - b) * c2 * s[2] * t[2])
    return x, y


POINTS = {"B": ((1, 0, 0), (1, 0, 0)), "C": ((1, 0, 0), (-1, 0, 0)),
          "E": ((0, 1, 0), (0, 1, 0)), "F": ((0, 1, 0), (0, -1, 0)),
          "A": ((0, 0, 1), (0, 0, 1)), "D": ((0, 0, 1), (0, 0, -1))}


def pairs(name, data):
    body = ",\n".join(f"    {{{float(x)!r}, {float(y)!r}}}" for x, y in data)
    return f"inline const std::vector<std::pair<double, double>> {name} = {{\n{body}}};\n"


out = ["#pragma once\n", "// Generated by generate.py; do not edit.\n",
       "#include <map>\n#include <string>\n#include <utility>\n#include <vector>\n",
       "namespace oracle {\n"]
out.append(pairs("joint_4_3_S2", joint(4.0, 3.0, 2)))
out.append(pairs("joint_4_2_S3", joint(4.0, 2.0, 3)))
out.append(pairs("joint_m2_05_S2", joint(-2.0, 0.5, 2)))
out.append(pairs("limiting_S4", limiting(4)))
for tag, (a, b) in {"4_2": (4.0, 2.0), "39_29": (3.9, 2.9), "05_3": (0.5, 3.0), "m2_m1": (-2.0, -1.0)}.items():
    vals = {k: classical(a, b, *v) for k, v in POINTS.items()}
    body = ",\n".join(f"    {{\"{k}\", {{{float(x)!r}, {float(y)!r}}}}}" for k, (x, y) in sorted(vals.items()))
    out.append(f"inline const std::map<std::string, std::pair<double, double>> critical_{tag} = {{\n{body}}};\n")
out.append("}  // namespace oracle\n")
open(__file__.replace("generate.py", "frozen.hpp"), "w").write("\n".join(out))
